#include "sap/charpoly.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "sap/errors.hpp"

namespace sap {

double CoeffVector::max_abs() const {
  double m = 0.0;
  for (double x : alpha) m = std::max(m, std::abs(x));
  return m;
}

namespace {

void require_square(const RealMatrix& a) {
  if (!a.square() || a.rows() == 0) throw Error(ErrorKind::DimensionError, "expected a non-empty square matrix");
}

template <class T>
CoeffVector faddeev_leverrier(const RealMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<T> A(n * n), M(n * n, T(0)), AM(n * n);
  for (std::size_t i = 0; i < n * n; ++i) A[i] = static_cast<T>(a.data()[i]);

  // c[k] is the coefficient of x^{n-k} in the monic characteristic polynomial.
  std::vector<T> c(n + 1, T(0));
  c[0] = T(1);
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{k-1} I, with A M_{k-1} carried over in AM.
    if (k == 1) {
      std::fill(M.begin(), M.end(), T(0));
    } else {
      M = AM;
    }
    for (std::size_t i = 0; i < n; ++i) M[i * n + i] += c[k - 1];
    T trace = T(0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        T s = T(0);
        for (std::size_t l = 0; l < n; ++l) s += A[i * n + l] * M[l * n + j];
        AM[i * n + j] = s;
      }
      trace += AM[i * n + i];
    }
    c[k] = -trace / static_cast<T>(k);
  }

  CoeffVector out;
  out.alpha.resize(n);
  for (std::size_t k = 1; k <= n; ++k) {
    const T v = (k % 2 == 0) ? c[k] : -c[k];
    out.alpha[k - 1] = static_cast<double>(v);
  }
  return out;
}

}  // namespace

CoeffVector char_coeffs(const RealMatrix& a, Precision precision) {
  require_square(a);
  if (precision == Precision::Extended) return faddeev_leverrier<long double>(a);
  return faddeev_leverrier<double>(a);
}

CoeffVector char_coeffs_oracle(const RealMatrix& a) {
  require_square(a);
  const std::size_t n = a.rows();
  if (n > 14) throw Error(ErrorKind::SizeLimitExceeded, "principal-minor oracle limited to n <= 14");

  CoeffVector out;
  out.alpha.assign(n, 0.0);
  std::vector<std::size_t> idx;
  std::vector<double> det;
  for (std::uint32_t subset = 1; subset < (1u << n); ++subset) {
    idx.clear();
    for (std::size_t i = 0; i < n; ++i)
      if (subset & (1u << i)) idx.push_back(i);
    const std::size_t k = idx.size();

    // det[C] = minor on rows idx[0..|C|-1] and columns idx[C], expanding
    // along the last of those rows.
    det.assign(std::size_t{1} << k, 0.0);
    det[0] = 1.0;
    for (std::uint32_t cols = 1; cols < (1u << k); ++cols) {
      const int m = std::popcount(cols);
      const std::size_t row = idx[m - 1];
      double s = 0.0;
      int position = 0;
      for (std::size_t j = 0; j < k; ++j) {
        if (!(cols & (1u << j))) continue;
        const double entry = a(row, idx[j]);
        if (entry != 0.0) {
          const double sign = ((m - 1 + position) % 2 == 0) ? 1.0 : -1.0;
          s += sign * entry * det[cols & ~(1u << j)];
        }
        ++position;
      }
      det[cols] = s;
    }
    out.alpha[k - 1] += det[(1u << k) - 1];
  }
  return out;
}

std::vector<mpq_class> char_coeffs_exact(const RealMatrix& a) {
  require_square(a);
  if (!a.all_finite()) throw Error(ErrorKind::InvalidInput, "non-finite matrix entry");
  const std::size_t n = a.rows();

  // Write A = 2^emin * Z with Z integral.
  std::vector<mpz_class> mant(n * n);
  std::vector<int> expo(n * n, 0);
  int emin = 0;
  bool any = false;
  for (std::size_t i = 0; i < n * n; ++i) {
    const double x = a.data()[i];
    if (x == 0.0) continue;
    int e = 0;
    const double f = std::frexp(x, &e);  // x = f * 2^e, 0.5 <= |f| < 1
    mant[i] = mpz_class(std::ldexp(f, 53));
    expo[i] = e - 53;
    emin = any ? std::min(emin, expo[i]) : expo[i];
    any = true;
  }
  std::vector<mpz_class> Z(n * n);
  for (std::size_t i = 0; i < n * n; ++i) {
    if (mant[i] == 0) continue;
    mpz_mul_2exp(Z[i].get_mpz_t(), mant[i].get_mpz_t(), static_cast<unsigned long>(expo[i] - emin));
  }

  std::vector<mpz_class> M(n * n), AM(n * n, 0);
  std::vector<mpz_class> c(n + 1, 0);
  c[0] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    M = AM;
    for (std::size_t i = 0; i < n; ++i) M[i * n + i] += c[k - 1];
    mpz_class trace = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        mpz_class s = 0;
        for (std::size_t l = 0; l < n; ++l)
          if (Z[i * n + l] != 0 && M[l * n + j] != 0) s += Z[i * n + l] * M[l * n + j];
        AM[i * n + j] = s;
      }
      trace += AM[i * n + i];
    }
    mpz_class q;
    mpz_divexact_ui(q.get_mpz_t(), trace.get_mpz_t(), static_cast<unsigned long>(k));
    c[k] = -q;
  }

  std::vector<mpq_class> out(n);
  for (std::size_t k = 1; k <= n; ++k) {
    mpq_class v(k % 2 == 0 ? c[k] : mpz_class(-c[k]));
    const long shift = static_cast<long>(k) * emin;
    if (shift >= 0) {
      mpq_mul_2exp(v.get_mpq_t(), v.get_mpq_t(), static_cast<unsigned long>(shift));
    } else {
      mpq_div_2exp(v.get_mpq_t(), v.get_mpq_t(), static_cast<unsigned long>(-shift));
    }
    out[k - 1] = v;
  }
  return out;
}

namespace {

// Radix-2 balancing by diagonal similarity; powers of two keep it exact.
void balance(Eigen::MatrixXd& m) {
  const Eigen::Index n = m.rows();
  bool done = false;
  while (!done) {
    done = true;
    for (Eigen::Index i = 0; i < n; ++i) {
      double c = 0.0, r = 0.0;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (j == i) continue;
        c += std::abs(m(j, i));
        r += std::abs(m(i, j));
      }
      if (c == 0.0 || r == 0.0) continue;
      double g = r / 2.0, f = 1.0;
      const double s = c + r;
      while (c < g) {
        f *= 2.0;
        c *= 4.0;
      }
      g = r * 2.0;
      while (c > g) {
        f /= 2.0;
        c /= 4.0;
      }
      if ((c + r) / f < 0.95 * s) {
        done = false;
        m.row(i) /= f;
        m.col(i) *= f;
      }
    }
  }
}

}  // namespace

SpectrumList spectrum(const RealMatrix& a) {
  require_square(a);
  const auto n = static_cast<Eigen::Index>(a.rows());
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = a(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  balance(m);

  Eigen::EigenSolver<Eigen::MatrixXd> solver(m, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) {
    std::ostringstream msg;
    msg << "QR iteration did not converge (n=" << n << ", ||A||_inf=" << a.norm_inf()
        << ", max|a_ij|=" << a.max_abs() << ")";
    throw Error(ErrorKind::ConvergenceError, msg.str());
  }
  SpectrumList out(solver.eigenvalues().begin(), solver.eigenvalues().end());
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.real() != y.real()) return x.real() < y.real();
    if (std::abs(x.imag()) != std::abs(y.imag())) return std::abs(x.imag()) < std::abs(y.imag());
    return x.imag() > y.imag();
  });
  return out;
}

std::vector<double> coeffs_to_monic(const CoeffVector& c) {
  std::vector<double> out(c.size());
  for (std::size_t j = 0; j < c.size(); ++j) out[j] = (j % 2 == 0) ? -c[j] : c[j];
  return out;
}

CoeffVector monic_to_coeffs(const std::vector<double>& monic) {
  CoeffVector out;
  out.alpha.resize(monic.size());
  for (std::size_t j = 0; j < monic.size(); ++j) out.alpha[j] = (j % 2 == 0) ? -monic[j] : monic[j];
  return out;
}

CoeffVector coeffs_from_spectrum(const SpectrumList& roots) {
  // poly[k] is the coefficient of x^{m-k} after m factors.
  std::vector<std::complex<double>> poly{1.0};
  for (const auto& lambda : roots) {
    poly.push_back(0.0);
    for (std::size_t k = poly.size() - 1; k > 0; --k) poly[k] -= lambda * poly[k - 1];
  }
  std::vector<double> monic(roots.size());
  for (std::size_t k = 1; k < poly.size(); ++k) monic[k - 1] = poly[k].real();
  return monic_to_coeffs(monic);
}

bool is_self_conjugate(const SpectrumList& roots, double tol) {
  std::vector<bool> used(roots.size(), false);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (used[i]) continue;
    if (std::abs(roots[i].imag()) <= tol) {
      used[i] = true;
      continue;
    }
    const auto target = std::conj(roots[i]);
    bool found = false;
    for (std::size_t j = 0; j < roots.size(); ++j) {
      if (j == i || used[j]) continue;
      if (std::abs(roots[j] - target) <= tol) {
        used[i] = used[j] = true;
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace sap
