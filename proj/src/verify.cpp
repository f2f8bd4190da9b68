// Copyright 2026 The mbqcxy Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mbqc/verify.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace mbqc {

namespace {

Eigen::Matrix2cd m_identity() { return Eigen::Matrix2cd::Identity(); }

Eigen::Matrix2cd m_x() {
  Eigen::Matrix2cd m;
  m << 0, 1, 1, 0;
  return m;
}

Eigen::Matrix2cd m_z() {
  Eigen::Matrix2cd m;
  m << 1, 0, 0, -1;
  return m;
}

Eigen::Matrix2cd m_h() {
  Eigen::Matrix2cd m;
  m << 1, 1, 1, -1;
  return m / std::numbers::sqrt2;
}

Eigen::Matrix2cd m_rz(double t) {
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
  m(0, 0) = std::polar(1.0, -t / 2);
  m(1, 1) = std::polar(1.0, t / 2);
  return m;
}

Eigen::Matrix2cd m_rx(double t) {
  Eigen::Matrix2cd m;
  m << cplx(std::cos(t / 2), 0), cplx(0, -std::sin(t / 2)),
      cplx(0, -std::sin(t / 2)), cplx(std::cos(t / 2), 0);
  return m;
}

// exp(-i t/2 Z_a X_b): (Z (x) X)^2 = I gives the closed form.
Eigen::MatrixXcd rzx_matrix(int za, int xb, double t, int n) {
  const Eigen::MatrixXcd g = kron_at(m_z(), za, n) * kron_at(m_x(), xb, n);
  const int dim = 1 << n;
  return std::cos(t / 2) * Eigen::MatrixXcd::Identity(dim, dim) -
         cplx(0, std::sin(t / 2)) * g;
}

double max_abs(const Eigen::MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

Eigen::MatrixXcd kron_at(const Eigen::Matrix2cd& g, int k, int n) {
  if (k < 1 || k > n) throw Error("kron_at: qubit out of range");
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Ones(1, 1);
  for (int q = 1; q <= n; ++q) {
    const Eigen::MatrixXcd f = (q == k) ? Eigen::MatrixXcd(g)
                                        : Eigen::MatrixXcd(m_identity());
    Eigen::MatrixXcd next(f.rows() * m.rows(), f.cols() * m.cols());
    for (int r = 0; r < f.rows(); ++r)
      for (int c = 0; c < f.cols(); ++c)
        next.block(r * m.rows(), c * m.cols(), m.rows(), m.cols()) = f(r, c) * m;
    m = std::move(next);
  }
  return m;
}

Eigen::MatrixXcd cz_matrix(int a, int b, int n) {
  const int dim = 1 << n;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(dim, dim);
  for (int i = 0; i < dim; ++i)
    if (((i >> (a - 1)) & 1) && ((i >> (b - 1)) & 1)) m(i, i) = -1;
  return m;
}

Eigen::MatrixXcd c_n_matrix(int n) {
  if (n < 1 || n > 6) throw Error("c_n_matrix: n out of range 1..6");
  const int dim = 1 << n;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(dim, dim);
  for (int i = 1; i <= n - 1; ++i) m = cz_matrix(i, i + 1, n) * m;
  for (int i = 1; i <= n; ++i) m = kron_at(m_h(), i, n) * m;
  return m;
}

Eigen::MatrixXcd mirror_matrix(int n) {
  const int dim = 1 << n;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (int i = 0; i < dim; ++i) {
    int r = 0;
    for (int b = 0; b < n; ++b)
      if (i & (1 << b)) r |= 1 << (n - 1 - b);
    m(r, i) = 1;
  }
  return m;
}

Eigen::MatrixXcd gate_matrix(const LogicalGate& g, int n) {
  const int dim = 1 << n;
  switch (g.kind) {
    case LogicalGate::Kind::kRz:
      return kron_at(m_rz(g.angle), g.qubit, n);
    case LogicalGate::Kind::kRx:
      return kron_at(m_rx(g.angle), g.qubit, n);
    case LogicalGate::Kind::kH:
      return kron_at(m_h(), g.qubit, n);
    case LogicalGate::Kind::kRzx: {
      const int z = g.orient == LogicalGate::Orientation::kZOnLower ? g.qubit
                                                                    : g.qubit + 1;
      const int x = g.orient == LogicalGate::Orientation::kZOnLower ? g.qubit + 1
                                                                    : g.qubit;
      return rzx_matrix(z, x, g.angle, n);
    }
    case LogicalGate::Kind::kCz:
      return cz_matrix(g.qubit, g.qubit + 1, n);
    case LogicalGate::Kind::kCnot: {
      Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
      const int cm = 1 << (g.qubit - 1);
      const int tm = 1 << (g.qubit2 - 1);
      for (int i = 0; i < dim; ++i) m((i & cm) ? (i ^ tm) : i, i) = 1;
      return m;
    }
    case LogicalGate::Kind::kSwap: {
      Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
      const int a = 1 << (g.qubit - 1);
      const int b = 1 << g.qubit;
      for (int i = 0; i < dim; ++i) {
        int j = i & ~(a | b);
        if (i & a) j |= b;
        if (i & b) j |= a;
        m(j, i) = 1;
      }
      return m;
    }
  }
  throw Error("gate_matrix: unreachable");
}

Eigen::MatrixXcd circuit_matrix(const LogicalCircuit& c) {
  c.validate();
  const int dim = 1 << c.width;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(dim, dim);
  for (const LogicalGate& g : c.gates) m = gate_matrix(g, c.width) * m;
  return m;
}

EquivResult unitary_equiv(const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& v,
                          double tol) {
  if (u.rows() != v.rows() || u.cols() != v.cols())
    throw Error("unitary_equiv: dimension mismatch");
  const cplx tr = (u.adjoint() * v).trace();
  EquivResult r;
  r.fidelity = std::abs(tr) / static_cast<double>(u.rows());
  r.pass = r.fidelity >= 1.0 - tol;
  r.phase = std::abs(tr) > 0 ? tr / std::abs(tr) : cplx(1);
  return r;
}

MirrorReport mirror_check(int n) {
  if (n > 5) throw Error("mirror_check: n out of range 1..5");
  const Eigen::MatrixXcd c = c_n_matrix(n);
  const int dim = 1 << n;
  Eigen::MatrixXcd p = Eigen::MatrixXcd::Identity(dim, dim);
  for (int k = 0; k < n + 1; ++k) p = c * p;
  const Eigen::MatrixXcd m = mirror_matrix(n);

  MirrorReport report;
  // lambda from the first nonzero mirror entry.
  for (int col = 0; col < dim && report.lambda == cplx(1, 0); ++col)
    for (int row = 0; row < dim; ++row)
      if (std::abs(m(row, col)) > 0.5) {
        report.lambda = p(row, col);
        break;
      }
  report.max_deviation = max_abs(p - report.lambda * m);

  double conj_dev = 0;
  for (int i = 1; i <= n; ++i) {
    conj_dev = std::max(conj_dev,
                        max_abs(p * kron_at(m_z(), i, n) * p.adjoint() -
                                kron_at(m_z(), n + 1 - i, n)));
    conj_dev = std::max(conj_dev,
                        max_abs(p * kron_at(m_x(), i, n) * p.adjoint() -
                                kron_at(m_x(), n + 1 - i, n)));
  }
  report.conjugation_deviation = conj_dev;

  // Literal operator reading C^{n+1} Z_i = Z_{n+1-i}: reported, not gated.
  double lit = 0;
  for (int i = 1; i <= n; ++i)
    lit = std::max(lit, max_abs(p * kron_at(m_z(), i, n) -
                                kron_at(m_z(), n + 1 - i, n)));
  report.literal_reading_deviation = lit;

  report.pass = report.max_deviation < 1e-10 && conj_dev < 1e-10;
  return report;
}

std::vector<CheckRecord> commutation_identities() {
  std::vector<CheckRecord> out;
  const int n = 2;

  const Eigen::MatrixXcd cz = cz_matrix(1, 2, n);
  out.push_back({"commutation_cz_z", n, 0,
                 max_abs(cz * kron_at(m_z(), 1, n) - kron_at(m_z(), 1, n) * cz),
                 false});
  out.push_back({"commutation_cz_x", n, 0,
                 max_abs(cz * kron_at(m_x(), 1, n) -
                         kron_at(m_x(), 1, n) * kron_at(m_z(), 2, n) * cz),
                 false});

  std::mt19937_64 rng(0x5eed);
  std::uniform_real_distribution<double> angle(0, 2 * std::numbers::pi);
  double dev = 0;
  for (int t = 0; t < 10; ++t) {
    const Eigen::MatrixXcd rz = kron_at(m_rz(angle(rng)), 1, n);
    dev = std::max(dev, max_abs(cz * rz - rz * cz));
  }
  out.push_back({"commutation_cz_rz", n, 0, dev, false});
  out.push_back({"identity_hzh_x", 1, 0,
                 max_abs(Eigen::MatrixXcd(m_h() * m_z() * m_h() - m_x())),
                 false});

  for (CheckRecord& r : out) r.pass = r.max_deviation < 1e-12;
  return out;
}

bool propagation_check(int n, int p, std::vector<CheckRecord>* records) {
  if (n < 2 || n > 4 || p <= 1 || p >= n + 1)
    throw Error("propagation_check: out of range (2<=n<=4, 1<p<n+1)");
  const Eigen::MatrixXcd c = c_n_matrix(n);
  const int pp = n - p + 2;
  const int dim = 1 << n;
  Eigen::MatrixXcd cp = Eigen::MatrixXcd::Identity(dim, dim);
  for (int k = 0; k < pp; ++k) cp = c * cp;

  const double row1 =
      max_abs(cp * kron_at(m_z(), 1, n) -
              kron_at(m_z(), n - p + 1, n) * kron_at(m_x(), n - p + 2, n) * cp);
  const double rown =
      max_abs(cp * kron_at(m_z(), n, n) -
              kron_at(m_x(), p - 1, n) * kron_at(m_z(), p, n) * cp);
  // One layer turns an edge-row Z into an X: the Z commutes with the
  // diagonal ladder and the Hadamard conjugates it.
  const double step1 =
      max_abs(c * kron_at(m_z(), 1, n) - kron_at(m_x(), 1, n) * c);
  const double stepn =
      max_abs(c * kron_at(m_z(), n, n) - kron_at(m_x(), n, n) * c);

  const bool pass = row1 < 1e-10 && rown < 1e-10 && step1 < 1e-10 && stepn < 1e-10;
  if (records) {
    records->push_back({"propagation_row1", n, p, row1, row1 < 1e-10});
    records->push_back({"propagation_rown", n, p, rown, rown < 1e-10});
    records->push_back({"propagation_single_step", n, p,
                        std::max(step1, stepn), std::max(step1, stepn) < 1e-10});
  }
  return pass;
}

StateVector oracle_simulate(const LogicalCircuit& c, const StateVector& input) {
  if (input.num_qubits() != c.width)
    throw Error("oracle_simulate: input width mismatch");
  const Eigen::MatrixXcd m = circuit_matrix(c);
  const int dim = 1 << c.width;
  Eigen::VectorXcd v(dim);
  for (int i = 0; i < dim; ++i) v(i) = input.amplitudes()[i];
  v = m * v;
  std::vector<cplx> amps(dim);
  for (int i = 0; i < dim; ++i) amps[i] = v(i);
  return StateVector::from_amplitudes(input.labels(), std::move(amps));
}

namespace {

void layer_product_checks(int max_n, std::vector<CheckRecord>& out) {
  for (int n = 2; n <= std::min(max_n, 3); ++n) {
    for (int m = 2; m <= 5; ++m) {
      const Eigen::MatrixXcd c = c_n_matrix(n);
      const int dim = 1 << n;
      Eigen::MatrixXcd target = Eigen::MatrixXcd::Identity(dim, dim);
      for (int j = 0; j < m - 1; ++j) target = c * target;
      const Eigen::MatrixXcd got = extract_unitary(all_x_pattern(n, m));
      const EquivResult eq = unitary_equiv(got, target, 1e-10);
      out.push_back({"layer_product_all_x", n, m, 1.0 - eq.fidelity, eq.pass});
    }
  }
}

void slab_rotation_checks(int max_n, std::vector<CheckRecord>& out) {
  std::mt19937_64 rng(0xabcd);
  std::uniform_real_distribution<double> angle(0, 2 * std::numbers::pi);
  for (int n = 2; n <= std::min(max_n, 4); ++n) {
    const Eigen::MatrixXcd mir = mirror_matrix(n);
    auto slab_unitary = [&](Site site, double theta) {
      MeasurementPattern p = all_x_pattern(n, n + 2);
      for (Step& st : p.steps)
        if (st.site == site) st.angle = theta;
      return extract_unitary(p);
    };

    double worst_rz = 0, worst_rx = 0, worst_rzx = 0;
    for (int i = 1; i <= n; ++i) {
      const double t1 = angle(rng), t2 = angle(rng);
      EquivResult eq = unitary_equiv(slab_unitary({i, 1}, t1),
                                     mir * kron_at(m_rz(t1), i, n), 1e-9);
      worst_rz = std::max(worst_rz, 1.0 - eq.fidelity);
      eq = unitary_equiv(slab_unitary({i, n + 1}, t2),
                         mir * kron_at(m_rx(t2), n + 1 - i, n), 1e-9);
      worst_rx = std::max(worst_rx, 1.0 - eq.fidelity);
    }
    for (int p = 2; p <= n; ++p) {
      const double t1 = angle(rng), t2 = angle(rng);
      EquivResult eq = unitary_equiv(slab_unitary({1, p}, t1),
                                     mir * rzx_matrix(p, p - 1, t1, n), 1e-9);
      worst_rzx = std::max(worst_rzx, 1.0 - eq.fidelity);
      eq = unitary_equiv(slab_unitary({n, p}, t2),
                         mir * rzx_matrix(n + 1 - p, n + 2 - p, t2, n), 1e-9);
      worst_rzx = std::max(worst_rzx, 1.0 - eq.fidelity);
    }
    out.push_back({"slab_z_rotation", n, 0, worst_rz, worst_rz < 1e-9});
    out.push_back({"slab_x_rotation", n, 0, worst_rx, worst_rx < 1e-9});
    if (n >= 2)
      out.push_back({"slab_entangling", n, 0, worst_rzx, worst_rzx < 1e-9});
  }
}

void decomposition_checks(std::vector<CheckRecord>& out) {
  struct Case {
    const char* name;
    LogicalGate gate;
    int width;
  };
  const Case cases[] = {
      {"decomposition_h", LogicalGate::h(1), 1},
      {"decomposition_cnot_down", LogicalGate::cnot(1, 2), 2},
      {"decomposition_cnot_up", LogicalGate::cnot(2, 1), 2},
      {"decomposition_swap", LogicalGate::swap(1), 2},
      {"decomposition_cz", LogicalGate::cz(1), 2},
      {"decomposition_cnot_routed", LogicalGate::cnot(1, 3), 3},
  };
  for (const Case& c : cases) {
    LogicalCircuit prim{c.width, decompose(c.gate, c.width)};
    const EquivResult eq = unitary_equiv(circuit_matrix(prim),
                                         gate_matrix(c.gate, c.width), 1e-12);
    out.push_back({c.name, c.width, 0, 1.0 - eq.fidelity, eq.pass});
  }
}

}  // namespace

std::vector<CheckRecord> run_verification(int max_n) {
  if (max_n < 1 || max_n > 5)
    throw Error("run_verification: max_n out of range 1..5");
  std::vector<CheckRecord> out;

  for (int n = 1; n <= max_n; ++n) {
    MirrorReport r = mirror_check(n);
    out.push_back({"mirror_proportional", n, 0, r.max_deviation,
                   r.max_deviation < 1e-10});
    out.push_back({"mirror_conjugation", n, 0, r.conjugation_deviation,
                   r.conjugation_deviation < 1e-10});
    out.push_back({"mirror_literal_reading", n, 0, r.literal_reading_deviation,
                   r.literal_reading_deviation < 1e-10, true});
  }

  for (const CheckRecord& r : commutation_identities()) out.push_back(r);

  for (int n = 2; n <= std::min(max_n, 4); ++n)
    for (int p = 2; p <= n; ++p) propagation_check(n, p, &out);

  decomposition_checks(out);
  layer_product_checks(max_n, out);
  slab_rotation_checks(max_n, out);
  return out;
}

bool all_pass(const std::vector<CheckRecord>& records) {
  for (const CheckRecord& r : records)
    if (!r.informational && !r.pass) return false;
  return true;
}

}  // namespace mbqc
