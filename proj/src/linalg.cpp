#include "qtel/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qtel {

namespace {

int log2_dim(Eigen::Index d) {
  int n = 0;
  while ((Eigen::Index{1} << n) < d) ++n;
  if ((Eigen::Index{1} << n) != d) {
    throw std::invalid_argument("matrix dimension is not a power of 2");
  }
  return n;
}

inline int bit_at(int index, int n, int slot) {
  return (index >> (n - 1 - slot)) & 1;
}

}  // namespace

int QubitIndexMap::slot(int label) const {
  for (int s = 0; s < size(); ++s) {
    if (labels[s] == label) return s;
  }
  throw std::invalid_argument("unknown particle label " + std::to_string(label));
}

bool QubitIndexMap::contains(int label) const {
  return std::find(labels.begin(), labels.end(), label) != labels.end();
}

QubitIndexMap QubitIndexMap::without(std::initializer_list<int> removed) const {
  QubitIndexMap out;
  for (int l : labels) {
    if (std::find(removed.begin(), removed.end(), l) == removed.end()) {
      out.labels.push_back(l);
    }
  }
  return out;
}

cmat kron(const cmat& a, const cmat& b) {
  cmat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

cmat partial_trace(const cmat& rho, const std::vector<int>& keep,
                   const QubitIndexMap& map) {
  const int n = map.size();
  if (rho.rows() != rho.cols() || rho.rows() != (Eigen::Index{1} << n)) {
    throw std::invalid_argument("state dimension does not match qubit map");
  }
  std::vector<int> keep_slots;
  keep_slots.reserve(keep.size());
  for (int label : keep) keep_slots.push_back(map.slot(label));

  std::vector<int> traced_slots;
  for (int s = 0; s < n; ++s) {
    if (std::find(keep_slots.begin(), keep_slots.end(), s) == keep_slots.end()) {
      traced_slots.push_back(s);
    }
  }

  const int k = static_cast<int>(keep_slots.size());
  const int t = n - k;
  cmat out = cmat::Zero(1 << k, 1 << k);
  for (int r = 0; r < (1 << k); ++r) {
    for (int c = 0; c < (1 << k); ++c) {
      cplx acc{0.0, 0.0};
      for (int tr = 0; tr < (1 << t); ++tr) {
        int fr = 0, fc = 0;
        for (int s = 0; s < n; ++s) {
          auto it = std::find(keep_slots.begin(), keep_slots.end(), s);
          int br, bc;
          if (it != keep_slots.end()) {
            int pos = static_cast<int>(it - keep_slots.begin());
            br = bit_at(r, k, pos);
            bc = bit_at(c, k, pos);
          } else {
            int pos = static_cast<int>(
                std::find(traced_slots.begin(), traced_slots.end(), s) -
                traced_slots.begin());
            br = bc = bit_at(tr, t, pos);
          }
          fr = (fr << 1) | br;
          fc = (fc << 1) | bc;
        }
        acc += rho(fr, fc);
      }
      out(r, c) = acc;
    }
  }
  return out;
}

cmat partial_transpose(const cmat& rho, int label, const QubitIndexMap& map) {
  const int n = map.size();
  if (rho.rows() != rho.cols() || rho.rows() != (Eigen::Index{1} << n)) {
    throw std::invalid_argument("state dimension does not match qubit map");
  }
  const int s = map.slot(label);
  const int mask = 1 << (n - 1 - s);
  cmat out(rho.rows(), rho.cols());
  for (int r = 0; r < rho.rows(); ++r) {
    for (int c = 0; c < rho.cols(); ++c) {
      int rr = (r & ~mask) | (c & mask);
      int cc = (c & ~mask) | (r & mask);
      out(rr, cc) = rho(r, c);
    }
  }
  return out;
}

Eigen::VectorXd hermitian_eigenvalues(const cmat& h) {
  if (h.rows() != h.cols()) {
    throw std::invalid_argument("eigensolver requires a square matrix");
  }
  const double herm_dev = (h - h.adjoint()).cwiseAbs().maxCoeff();
  if (herm_dev > HERMITICITY_TOL) {
    throw std::invalid_argument("matrix is not Hermitian (max deviation " +
                                std::to_string(herm_dev) + ")");
  }

  const Eigen::Index d = h.rows();
  cmat a = (h + h.adjoint()) / 2.0;

  auto off_mass = [&a, d]() {
    double sum = 0.0;
    for (Eigen::Index i = 0; i < d; ++i) {
      for (Eigen::Index j = 0; j < d; ++j) {
        if (i != j) sum += std::norm(a(i, j));
      }
    }
    return std::sqrt(sum);
  };

  constexpr int kMaxSweeps = 100;
  int sweep = 0;
  while (off_mass() >= EIG_TOL) {
    if (++sweep > kMaxSweeps) {
      throw std::runtime_error("Jacobi eigensolver failed to converge");
    }
    for (Eigen::Index p = 0; p < d - 1; ++p) {
      for (Eigen::Index q = p + 1; q < d; ++q) {
        const cplx apq = a(p, q);
        const double beta = std::abs(apq);
        if (beta < 1e-300) continue;
        const cplx phase = apq / beta;  // e^{i phi}
        const double alpha = a(p, p).real();
        const double gamma = a(q, q).real();
        const double tau = (gamma - alpha) / (2.0 * beta);
        const double t =
            (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(tau * tau + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        // Unitary V: V(p,p)=c, V(p,q)=s, V(q,p)=-s e^{-i phi}, V(q,q)=c e^{-i phi}.
        // Apply a <- V^dagger a V on columns then rows.
        const cplx ph_conj = std::conj(phase);
        cvec colp = a.col(p), colq = a.col(q);
        a.col(p) = c * colp - s * ph_conj * colq;
        a.col(q) = s * colp + c * ph_conj * colq;
        cvec rowp = a.row(p).transpose(), rowq = a.row(q).transpose();
        a.row(p) = (c * rowp - s * phase * rowq).transpose();
        a.row(q) = (s * rowp + c * phase * rowq).transpose();
      }
    }
  }

  Eigen::VectorXd evals(d);
  for (Eigen::Index i = 0; i < d; ++i) evals(i) = a(i, i).real();
  std::sort(evals.data(), evals.data() + d);
  return evals;
}

cmat contract_bra(const cmat& rho, const cvec& psi, int label0, int label1,
                  const QubitIndexMap& map) {
  const int n = map.size();
  if (rho.rows() != (Eigen::Index{1} << n)) {
    throw std::invalid_argument("state dimension does not match qubit map");
  }
  const int s0 = map.slot(label0);
  const int s1 = map.slot(label1);
  const int m = n - 2;
  const int m0 = 1 << (n - 1 - s0);
  const int m1 = 1 << (n - 1 - s1);

  // Full-space index for each (remaining index, pair bits) combination.
  std::vector<int> rem_slots;
  for (int s = 0; s < n; ++s) {
    if (s != s0 && s != s1) rem_slots.push_back(s);
  }
  auto expand = [&](int compact, int pair) {
    int full = 0;
    for (int k = 0; k < m; ++k) {
      if (bit_at(compact, m, k)) full |= 1 << (n - 1 - rem_slots[k]);
    }
    if (pair & 2) full |= m0;
    if (pair & 1) full |= m1;
    return full;
  };

  cmat out = cmat::Zero(1 << m, 1 << m);
  for (int r = 0; r < (1 << m); ++r) {
    for (int c = 0; c < (1 << m); ++c) {
      cplx acc{0.0, 0.0};
      for (int pr = 0; pr < 4; ++pr) {
        const cplx wr = std::conj(psi(pr));
        if (wr == cplx{0.0, 0.0}) continue;
        const int fr = expand(r, pr);
        for (int pc = 0; pc < 4; ++pc) {
          acc += wr * rho(fr, expand(c, pc)) * psi(pc);
        }
      }
      out(r, c) = acc;
    }
  }
  return out;
}

}  // namespace qtel
