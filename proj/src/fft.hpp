#pragma once

#include <complex>
#include <span>

namespace trapzssq::detail {

/// out_k = sum_j in_j e^{-2 pi i jk / N}, unnormalized.
void dft_forward(std::span<const std::complex<double>> in, std::span<std::complex<double>> out);

/// out_j = sum_k in_k e^{+2 pi i jk / N}, unnormalized.
void dft_backward(std::span<const std::complex<double>> in, std::span<std::complex<double>> out);

}  // namespace trapzssq::detail
