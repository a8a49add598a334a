#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace apinn::spectral {

using cplx = std::complex<double>;

bool is_power_of_two(int n);

/// Radix-2 transform of a fixed length with precomputed twiddles and bit reversal.
/// Forward uses exp(-i k x); inverse is scaled by 1/n.
class FftPlan {
public:
    explicit FftPlan(int n);

    int size() const { return n_; }
    /// Transforms n entries starting at `data`, spaced `stride` apart.
    void run(cplx* data, bool inverse, std::ptrdiff_t stride = 1) const;

private:
    int n_;
    std::vector<int> reverse_;
    std::vector<cplx> twiddle_;  // exp(-2 pi i k / n), k < n/2
    mutable std::vector<cplx> scratch_;
};

void fft(std::vector<cplx>& a, bool inverse = false);

/// Row-major n0 x n1 array, transformed along both axes.
void fft2(std::vector<cplx>& a, int n0, int n1, bool inverse = false);

/// Angular wavenumbers 2 pi k / length in FFT order (0, 1, .., n/2, -n/2+1, .., -1).
/// The Nyquist entry carries +n/2; callers zero it for odd-order derivatives.
std::vector<double> wavenumbers(int n, double length);

}  // namespace apinn::spectral
