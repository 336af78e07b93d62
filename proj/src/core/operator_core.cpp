#include "operator_core.hpp"

#include <algorithm>
#include <vector>

namespace renyi {

bool is_hermitian(const Mat& A, double tol) {
  if (A.rows() != A.cols()) return false;
  double scale = A.cwiseAbs().maxCoeff();
  if (scale == 0.0) return true;
  return (A - A.adjoint()).cwiseAbs().maxCoeff() <= tol * scale;
}

namespace {

// Fix the phase of each column so its first entry of significant magnitude is
// real and positive; makes degenerate-free decompositions reproducible.
void fix_phases(Mat& U) {
  for (Eigen::Index j = 0; j < U.cols(); ++j) {
    double colmax = U.col(j).cwiseAbs().maxCoeff();
    if (colmax == 0.0) continue;
    for (Eigen::Index i = 0; i < U.rows(); ++i) {
      if (std::abs(U(i, j)) > 1e-8 * colmax) {
        Cplx phase = U(i, j) / std::abs(U(i, j));
        U.col(j) *= std::conj(phase);
        break;
      }
    }
  }
}

}  // namespace

namespace {

// True when A is exactly diagonal with real entries; such matrices get an
// exact decomposition (no solver round-off), keeping classical/commuting
// computations bit-accurate even across 20 orders of magnitude.
bool is_exactly_diagonal(const Mat& A) {
  for (Eigen::Index i = 0; i < A.rows(); ++i)
    for (Eigen::Index j = 0; j < A.cols(); ++j) {
      if (i == j ? A(i, j).imag() != 0.0 : A(i, j) != Cplx(0.0, 0.0))
        return false;
    }
  return true;
}

}  // namespace

SpectralData spectral_decompose(const Mat& A, double rank_tol) {
  if (!is_hermitian(A))
    throw std::invalid_argument("spectral_decompose: input is not Hermitian");
  const Eigen::Index d = A.rows();

  if (is_exactly_diagonal(A)) {
    std::vector<Eigen::Index> idx(static_cast<size_t>(d), 0);
    for (Eigen::Index i = 0; i < d; ++i) idx[size_t(i)] = i;
    std::stable_sort(idx.begin(), idx.end(),
                     [&](Eigen::Index a, Eigen::Index b) {
                       return A(a, a).real() > A(b, b).real();
                     });
    SpectralData sd;
    sd.eigenvalues = Vec(d);
    sd.eigenvectors = Mat::Zero(d, d);
    for (Eigen::Index j = 0; j < d; ++j) {
      sd.eigenvalues(j) = A(idx[size_t(j)], idx[size_t(j)]).real();
      sd.eigenvectors(idx[size_t(j)], j) = Cplx(1.0, 0.0);
    }
    const double lmax = sd.eigenvalues.cwiseAbs().maxCoeff();
    sd.effective_rank = 0;
    for (Eigen::Index i = 0; i < d; ++i)
      if (std::abs(sd.eigenvalues(i)) > rank_tol * lmax) ++sd.effective_rank;
    return sd;
  }

  // Symmetrize to kill round-off asymmetry before handing to the solver.
  Mat H = (A + A.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Mat> es(H);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("spectral_decompose: eigensolver failed");

  SpectralData sd;
  sd.eigenvalues = es.eigenvalues().reverse();  // descending
  sd.eigenvectors = Mat(d, d);
  for (Eigen::Index j = 0; j < d; ++j)
    sd.eigenvectors.col(j) = es.eigenvectors().col(d - 1 - j);

  // Re-pick bases of degenerate clusters by Gram-Schmidt against the standard
  // basis in lexicographic order so that repeated runs (and permuted inputs)
  // produce the same eigenvectors.
  const double lam_max = sd.eigenvalues.cwiseAbs().maxCoeff();
  const double cluster_tol = std::max(1e-12, 1e-10 * std::max(1.0, lam_max));
  Eigen::Index start = 0;
  while (start < d) {
    Eigen::Index end = start + 1;
    while (end < d &&
           std::abs(sd.eigenvalues(end) - sd.eigenvalues(start)) <= cluster_tol)
      ++end;
    const Eigen::Index k = end - start;
    if (k > 1) {
      // Projector onto the cluster eigenspace.
      Mat V = sd.eigenvectors.block(0, start, d, k);
      Mat P = V * V.adjoint();
      Mat basis(d, k);
      Eigen::Index got = 0;
      for (Eigen::Index e = 0; e < d && got < k; ++e) {
        Eigen::VectorXcd v = P.col(e);  // P * standard basis vector e
        for (Eigen::Index c = 0; c < got; ++c)
          v -= basis.col(c).dot(v) * basis.col(c);
        double nrm = v.norm();
        if (nrm > 1e-6) {
          basis.col(got++) = v / nrm;
        }
      }
      // Fall back to the solver's vectors for any remainder (should not
      // happen for genuine projectors, but keep the decomposition valid).
      for (Eigen::Index c = got; c < k; ++c) {
        Eigen::VectorXcd v = V.col(c);
        for (Eigen::Index b = 0; b < c; ++b)
          v -= basis.col(b).dot(v) * basis.col(b);
        basis.col(c) = v / v.norm();
      }
      sd.eigenvectors.block(0, start, d, k) = basis;
    }
    start = end;
  }
  fix_phases(sd.eigenvectors);

  sd.effective_rank = 0;
  for (Eigen::Index i = 0; i < d; ++i)
    if (std::abs(sd.eigenvalues(i)) > rank_tol * lam_max) ++sd.effective_rank;
  (void)rank_tol;
  return sd;
}

Vec psd_eigenvalues(const SpectralData& sd, double rank_tol) {
  Vec ev = sd.eigenvalues;
  const double lam_max = ev.size() ? ev.maxCoeff() : 0.0;
  const double floor = -rank_tol * std::max(lam_max, 0.0);
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev(i) < floor)
      throw std::invalid_argument(
          "psd_eigenvalues: matrix has a genuinely negative eigenvalue " +
          std::to_string(ev(i)));
    if (ev(i) < 0.0) ev(i) = 0.0;
  }
  return ev;
}

Mat fractional_power(const SpectralData& sd, double p, double rank_tol) {
  Vec ev = psd_eigenvalues(sd, rank_tol);
  const double lam_max = ev.size() ? ev.maxCoeff() : 0.0;
  const double cutoff = rank_tol * lam_max;
  Vec f(ev.size());
  for (Eigen::Index i = 0; i < ev.size(); ++i)
    f(i) = (ev(i) > cutoff) ? std::pow(ev(i), p) : 0.0;  // 0^p := 0
  return sd.eigenvectors * f.asDiagonal() * sd.eigenvectors.adjoint();
}

Mat fractional_power(const Mat& A, double p, double rank_tol) {
  return fractional_power(spectral_decompose(A, rank_tol), p, rank_tol);
}

Mat support_projection(const Mat& A, double rank_tol) {
  return fractional_power(A, 0.0, rank_tol);
}

bool support_leq(const Mat& A, const Mat& B, double tol) {
  Mat A0 = support_projection(A);
  Mat B0 = support_projection(B);
  Mat off = (Mat::Identity(B0.rows(), B0.cols()) - B0) * A0;
  // ||X||_inf via the largest singular value.
  double nrm = off.jacobiSvd().singularValues().size()
                   ? off.jacobiSvd().singularValues()(0)
                   : 0.0;
  return nrm <= tol;
}

Mat spectral_truncation(const Mat& sigma, double c, double d, double rank_tol) {
  if (!(c > 0.0) || !(d > c))
    throw std::invalid_argument("spectral_truncation: need 0 < c < d");
  SpectralData sd = spectral_decompose(sigma, rank_tol);
  const Eigen::Index n = sd.eigenvalues.size();
  Mat P = Mat::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    double lam = sd.eigenvalues(i);
    if (lam > c && lam < d)
      P += sd.eigenvectors.col(i) * sd.eigenvectors.col(i).adjoint();
  }
  return P;
}

double schatten_norm(const Mat& X, double p, double rank_tol) {
  if (!(p > 0.0))
    throw std::invalid_argument("schatten_norm: p must be positive");
  Eigen::JacobiSVD<Mat> svd(X);
  const auto& s = svd.singularValues();
  if (s.size() == 0) return 0.0;
  const double smax = s(0);
  if (smax == 0.0) return 0.0;
  // Every strictly positive singular value contributes: dropping values near
  // a relative cutoff loses s^p mass that matters for p < 1.
  (void)rank_tol;
  double acc = 0.0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > 0.0) acc += std::pow(s(i), p);
  return std::pow(acc, 1.0 / p);
}

Mat compress(const Mat& K, const Mat& A) {
  if (K.cols() != A.rows())
    throw std::invalid_argument("compress: dimension mismatch");
  double top = K.jacobiSvd().singularValues().size()
                   ? K.jacobiSvd().singularValues()(0)
                   : 0.0;
  if (top > 1.0 + 1e-8)
    throw std::invalid_argument("compress: K is not a contraction (||K|| = " +
                                std::to_string(top) + ")");
  return K * A * K.adjoint();
}

double log_sum_exp(const std::vector<double>& xs) {
  double m = -std::numeric_limits<double>::infinity();
  for (double x : xs) m = std::max(m, x);
  if (!std::isfinite(m)) return m;  // empty, all -inf, or +inf present
  double acc = 0.0;
  for (double x : xs) acc += std::exp(x - m);
  return m + std::log(acc);
}

}  // namespace renyi
