#include "kstab/pdivisor.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace kstab {

namespace {

RationalMatrix to_rational_rows(const IntMatrix& m) {
  RationalMatrix out(m.rows(), RationalVector(m.cols()));
  for (unsigned r = 0; r < m.rows(); ++r)
    for (unsigned c = 0; c < m.cols(); ++c) out[r][c] = Rational(m.at(r, c));
  return out;
}

void validate_shapes(const ExactSequenceData& d) {
  const unsigned n = d.f.rows(), r = d.f.cols();
  if (r >= n) throw PreconditionError("exact sequence needs r < N");
  if (d.p.rows() != n - r || d.p.cols() != n)
    throw PreconditionError("P must be (N-r) x N");
  if (d.s.rows() != r || d.s.cols() != n)
    throw PreconditionError("s must be r x N");
}

void validate_relations(const ExactSequenceData& d) {
  validate_shapes(d);
  if (!(d.p * d.f).is_zero())
    throw PreconditionError("P * F != 0");
  if (d.s * d.f != IntMatrix::identity(d.rank()))
    throw PreconditionError("s * F != identity");
  if (rational_rank(d.p) != d.p.rows())
    throw PreconditionError("P does not have full row rank");
  const SmithResult snf = smith_normal_form(d.p);
  for (unsigned i = 0; i < d.p.rows(); ++i)
    if (snf.d.at(i, i) != 1)
      throw PreconditionError(
          "rows of P do not generate the cokernel lattice");
}

void require_unit_divisors(const IntMatrix& f) {
  const SmithResult snf = smith_normal_form(f);
  for (unsigned i = 0; i < f.cols(); ++i) {
    if (snf.d.at(i, i) == 0)
      throw PreconditionError("F is not injective");
    if (snf.d.at(i, i) != 1)
      throw PreconditionError(
          "torsion cokernel: the image of F is not saturated (elementary "
          "divisor " + snf.d.at(i, i).str() + ")");
  }
}

}  // namespace

ExactSequenceData cokernel_and_splitting(const IntMatrix& f) {
  const unsigned n = f.rows(), r = f.cols();
  if (r >= n) throw PreconditionError("F must be N x r with r < N");
  require_unit_divisors(f);
  // U F V = D = [I_r; 0]. Rows r..N-1 of U project onto the cokernel and
  // V * (top r rows of U) splits: both identities follow from U F = D V^-1.
  const SmithResult snf = smith_normal_form(f);
  IntMatrix p = snf.u.row_slice(r, n - r);
  IntMatrix s = snf.v * snf.u.row_slice(0, r);
  // Canonicalize: Hermite form of P, then s reduced mod the row lattice.
  p = hermite_normal_form(p).h;
  for (unsigned row = 0; row < s.rows(); ++row) {
    const auto reduced = reduce_mod_row_lattice(s.row(row), p);
    for (unsigned c = 0; c < s.cols(); ++c) s.at(row, c) = reduced[c];
  }
  ExactSequenceData data{f, std::move(p), std::move(s)};
  validate_relations(data);
  return data;
}

ExactSequenceData exact_sequence_with_splitting(IntMatrix f, IntMatrix p,
                                                IntMatrix s) {
  require_unit_divisors(f);
  ExactSequenceData data{std::move(f), std::move(p), std::move(s)};
  validate_relations(data);
  return data;
}

std::vector<std::vector<BigInt>> tail_cone(const ExactSequenceData& data) {
  return cone_extreme_rays(to_rational_rows(data.f), data.rank());
}

std::vector<std::vector<BigInt>> dual_tail_cone(const ExactSequenceData& data) {
  const auto sigma = tail_cone(data);
  RationalMatrix rows;
  for (const auto& ray : sigma) {
    RationalVector row(ray.size());
    for (std::size_t i = 0; i < ray.size(); ++i) row[i] = Rational(ray[i]);
    rows.push_back(std::move(row));
  }
  return cone_extreme_rays(rows, data.rank());
}

std::vector<RayGroup> downstairs_rays(const ExactSequenceData& data) {
  std::vector<RayGroup> groups;
  for (unsigned c = 0; c < data.num_coords(); ++c) {
    const auto column = data.p.col(c);
    RationalVector as_rational(column.size());
    bool zero = true;
    for (std::size_t i = 0; i < column.size(); ++i) {
      as_rational[i] = Rational(column[i]);
      if (column[i] != 0) zero = false;
    }
    if (zero)
      throw PreconditionError(
          "coordinate maps to the zero downstairs ray (P has a zero column)");
    const auto prim = primitive_vector(as_rational);
    auto it = std::find_if(groups.begin(), groups.end(),
                           [&](const RayGroup& g) { return g.ray == prim; });
    if (it == groups.end()) {
      groups.push_back({prim, {c}});
    } else {
      it->coords.push_back(c);
    }
  }
  return groups;
}

std::optional<Polyhedron> delta_polytope(const ExactSequenceData& data,
                                         const std::vector<BigInt>& rho) {
  const unsigned n = data.num_coords(), r = data.rank();
  if (rho.size() != n - r)
    throw PreconditionError("rho dimension does not match the downstairs lattice");
  // Any rational solution x0 of P x0 = rho; the fiber is x0 + F(Q^r), so
  // Delta = s(x0) + { xi : F xi >= -x0 }.
  RationalMatrix lhs;  // (N-r) x N system solved via an augmented square trick
  // Solve with Gaussian elimination on the underdetermined system directly.
  RationalMatrix a(n - r, RationalVector(n));
  for (unsigned i = 0; i < n - r; ++i)
    for (unsigned j = 0; j < n; ++j) a[i][j] = Rational(data.p.at(i, j));
  RationalVector rhs(n - r);
  for (unsigned i = 0; i < n - r; ++i) rhs[i] = Rational(rho[i]);
  // Row-reduce [A | rhs].
  std::vector<int> pivot_of_row;
  std::size_t row = 0;
  for (unsigned c = 0; c < n && row < a.size(); ++c) {
    std::size_t piv = row;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[row]);
    std::swap(rhs[piv], rhs[row]);
    for (std::size_t r2 = 0; r2 < a.size(); ++r2) {
      if (r2 == row || a[r2][c] == 0) continue;
      const Rational f = a[r2][c] / a[row][c];
      for (unsigned c2 = 0; c2 < n; ++c2) a[r2][c2] -= f * a[row][c2];
      rhs[r2] -= f * rhs[row];
    }
    pivot_of_row.push_back(static_cast<int>(c));
    ++row;
  }
  if (row < a.size())
    throw PreconditionError("P is rank-deficient");  // guarded earlier anyway
  RationalVector x0(n, Rational(0));
  for (std::size_t k = 0; k < pivot_of_row.size(); ++k) {
    const unsigned pc = static_cast<unsigned>(pivot_of_row[k]);
    x0[pc] = rhs[k] / a[k][pc];
  }
  // Fiber polyhedron in xi-space: F xi >= -x0.
  RationalMatrix ineq = to_rational_rows(data.f);
  RationalVector bound(n);
  for (unsigned i = 0; i < n; ++i) bound[i] = -x0[i];
  Polyhedron fiber = polyhedron_from_inequalities(ineq, bound, r);
  if (fiber.empty()) return std::nullopt;
  // Shift by s(x0).
  RationalVector shift(r, Rational(0));
  for (unsigned i = 0; i < r; ++i)
    for (unsigned j = 0; j < n; ++j) shift[i] += Rational(data.s.at(i, j)) * x0[j];
  return fiber.translated(shift);
}

Rational SupportFunction::eval(const RationalVector& w) const {
  if (vertices.empty())
    throw PreconditionError("support function of an empty polytope");
  bool first = true;
  Rational best(0);
  for (const auto& v : vertices) {
    Rational acc(0);
    for (std::size_t i = 0; i < w.size(); ++i) acc += w[i] * v[i];
    if (first || acc < best) best = acc;
    first = false;
  }
  return best;
}

SupportFunction support_function(const Polyhedron& delta) {
  return SupportFunction{delta.vertices};
}

Polyhedron canonical_translate(const Polyhedron& delta) {
  if (delta.empty()) return delta;
  const RationalVector& lead = delta.vertices.front();  // vertices are sorted
  RationalVector shift(lead.size());
  for (std::size_t i = 0; i < lead.size(); ++i)
    shift[i] = -Rational(rational_floor(lead[i]));
  return delta.translated(shift);
}

std::string to_string(CoefficientClass c) {
  switch (c) {
    case CoefficientClass::LatticeTranslate: return "lattice-translate";
    case CoefficientClass::NonIntegralVertex: return "non-integral-slope";
    case CoefficientClass::MultiVertex: return "multi-vertex";
    case CoefficientClass::Empty: return "empty";
  }
  return "?";
}

PDivisor build_pdivisor(ExactSequenceData data) {
  PDivisor pd;
  pd.sigma = tail_cone(data);
  pd.sigma_dual = dual_tail_cone(data);
  for (auto& group : downstairs_rays(data)) {
    PDivisorEntry entry;
    entry.delta = delta_polytope(data, group.ray);
    entry.group = std::move(group);
    pd.entries.push_back(std::move(entry));
  }
  pd.data = std::move(data);
  return pd;
}

SlopeReport slope_integrality_report(const PDivisor& pd) {
  SlopeReport report;
  std::set<std::vector<RationalVector>> nontrivial_classes;
  for (const auto& entry : pd.entries) {
    SlopeReportEntry out;
    out.group = entry.group;
    out.multiplicity = entry.multiplicity;
    if (!entry.delta) {
      out.cls = CoefficientClass::Empty;
      report.entries.push_back(std::move(out));
      continue;
    }
    out.canonical_delta = canonical_translate(*entry.delta);
    const auto& verts = out.canonical_delta.vertices;
    if (verts.size() >= 2) {
      out.cls = CoefficientClass::MultiVertex;
      nontrivial_classes.insert(verts);
    } else {
      bool integral = true;
      for (const Rational& x : verts.front())
        if (!is_integer(x)) integral = false;
      // A lone integral vertex is removable: shifting it to the origin and
      // compensating at another base point is an equivalence of p-divisors.
      out.cls = integral ? CoefficientClass::LatticeTranslate
                         : CoefficientClass::NonIntegralVertex;
      if (!integral) nontrivial_classes.insert(verts);
    }
    report.entries.push_back(std::move(out));
  }
  const unsigned raw = static_cast<unsigned>(nontrivial_classes.size());
  if (pd.data.rank() == 2 && raw > 2) {
    report.count_nontrivial_bound = 2;
    report.capped = true;
    report.note =
        "bound capped at two: a complexity-one threefold with this tail cone "
        "admits at most two non-product equivariant degenerations";
  } else {
    report.count_nontrivial_bound = raw;
    report.note = "upper bound from distinct nontrivial coefficient classes";
  }
  return report;
}

}  // namespace kstab
