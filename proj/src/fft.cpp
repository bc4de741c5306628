#include "hermite/fft.hpp"

#include <fftw3.h>

#include <mutex>

namespace hermite {

namespace {
std::mutex plan_mutex;

void run_fft(std::vector<std::complex<double>>& data, int sign) {
    auto* ptr = reinterpret_cast<fftw_complex*>(data.data());
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(plan_mutex);
        plan = fftw_plan_dft_1d(static_cast<int>(data.size()), ptr, ptr, sign, FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(plan_mutex);
        fftw_destroy_plan(plan);
    }
}
}  // namespace

void fft_forward(std::vector<std::complex<double>>& data) { run_fft(data, FFTW_FORWARD); }
void fft_inverse(std::vector<std::complex<double>>& data) { run_fft(data, FFTW_BACKWARD); }

std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

std::vector<double> fft_convolve(const std::vector<double>& a, const std::vector<double>& b) {
    std::size_t out_len = a.size() + b.size() - 1;
    std::size_t m = next_pow2(out_len);
    std::vector<std::complex<double>> fa(m), fb(m);
    for (std::size_t i = 0; i < a.size(); ++i) fa[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) fb[i] = b[i];
    fft_forward(fa);
    fft_forward(fb);
    for (std::size_t i = 0; i < m; ++i) fa[i] *= fb[i];
    fft_inverse(fa);
    std::vector<double> out(out_len);
    for (std::size_t i = 0; i < out_len; ++i) out[i] = fa[i].real() / static_cast<double>(m);
    return out;
}

}  // namespace hermite
