#include "fft_backend.hpp"

#include <fftw3.h>

#include <cstring>
#include <map>
#include <stdexcept>

namespace chlab::fft {
namespace {

struct PlanPair {
  fftw_complex* in = nullptr;
  fftw_complex* out = nullptr;
  fftw_plan fwd = nullptr;
  fftw_plan bwd = nullptr;
  std::size_t n = 0;

  explicit PlanPair(std::size_t n_) : n(n_) {
    in = fftw_alloc_complex(n);
    out = fftw_alloc_complex(n);
    fwd = fftw_plan_dft_1d(int(n), in, out, FFTW_FORWARD, FFTW_ESTIMATE);
    bwd = fftw_plan_dft_1d(int(n), in, out, FFTW_BACKWARD, FFTW_ESTIMATE);
    if (!fwd || !bwd) throw std::runtime_error("fftw plan creation failed");
  }
  PlanPair(const PlanPair&) = delete;
  ~PlanPair() {
    if (fwd) fftw_destroy_plan(fwd);
    if (bwd) fftw_destroy_plan(bwd);
    if (in) fftw_free(in);
    if (out) fftw_free(out);
  }
};

PlanPair& plans_for(std::size_t n) {
  static std::map<std::size_t, PlanPair> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.try_emplace(n, n).first;
  return it->second;
}

void run(const std::vector<std::complex<double>>& in,
         std::vector<std::complex<double>>& out, bool forward_dir) {
  const std::size_t n = in.size();
  PlanPair& pp = plans_for(n);
  std::memcpy(pp.in, in.data(), n * sizeof(fftw_complex));
  fftw_execute(forward_dir ? pp.fwd : pp.bwd);
  out.resize(n);
  std::memcpy(out.data(), pp.out, n * sizeof(fftw_complex));
}

}  // namespace

void forward(const std::vector<std::complex<double>>& in,
             std::vector<std::complex<double>>& out) {
  run(in, out, true);
}

void backward(const std::vector<std::complex<double>>& in,
              std::vector<std::complex<double>>& out) {
  run(in, out, false);
}

}  // namespace chlab::fft
