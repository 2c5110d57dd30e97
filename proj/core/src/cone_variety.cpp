#include "kstab/cone_variety.hpp"

#include <functional>

namespace kstab {

TorusWeights::TorusWeights(unsigned rank, unsigned num_coords,
                           std::vector<std::vector<BigInt>> rows)
    : rank_(rank), num_coords_(num_coords), rows_(std::move(rows)) {
  if (rank_ < 1 || num_coords_ < 2)
    throw PreconditionError("torus weights need rank >= 1 and N >= 2");
  if (rows_.size() != rank_)
    throw PreconditionError("weight matrix row count does not match rank");
  for (const auto& row : rows_)
    if (row.size() != num_coords_)
      throw PreconditionError("weight matrix column count does not match N");
}

Character TorusWeights::column(unsigned col) const {
  Character chi(rank_);
  for (unsigned i = 0; i < rank_; ++i) chi[i] = rows_[i][col];
  return chi;
}

std::vector<Rational> TorusWeights::coordinate_weights(const ReebVector& xi) const {
  if (xi.size() != rank_)
    throw PreconditionError("Reeb vector dimension does not match torus rank");
  std::vector<Rational> w(num_coords_, Rational(0));
  for (unsigned j = 0; j < num_coords_; ++j)
    for (unsigned i = 0; i < rank_; ++i) w[j] += Rational(rows_[i][j]) * xi[i];
  return w;
}

Character TorusWeights::monomial_character(const Monomial& mono) const {
  if (mono.size() != num_coords_)
    throw PreconditionError("monomial length does not match N");
  Character chi(rank_, BigInt(0));
  for (unsigned i = 0; i < rank_; ++i)
    for (unsigned j = 0; j < num_coords_; ++j) chi[i] += rows_[i][j] * mono[j];
  return chi;
}

ConeVariety ConeVariety::ambient(TorusWeights w, std::vector<std::string> names) {
  const unsigned n = w.num_coords();
  return ConeVariety{std::move(w), {}, n, 1, std::move(names)};
}

ConeVariety ConeVariety::hypersurface(TorusWeights w, std::vector<Monomial> fsup,
                                      std::vector<std::string> names) {
  if (fsup.empty())
    throw PreconditionError("hypersurface requires a nonempty support");
  for (const auto& mono : fsup) {
    if (mono.size() != w.num_coords())
      throw PreconditionError("monomial length does not match N");
    for (long e : mono)
      if (e < 0) throw PreconditionError("negative exponent in monomial support");
  }
  const unsigned n = w.num_coords() - 1;
  ConeVariety v{std::move(w), std::move(fsup), n, 1, std::move(names)};
  fcharacter(v);  // validates semi-invariance up front
  return v;
}

Rational pair_character(const Character& chi, const ReebVector& xi) {
  if (chi.size() != xi.size())
    throw PreconditionError("character/Reeb vector dimension mismatch");
  Rational acc(0);
  for (std::size_t i = 0; i < chi.size(); ++i) acc += Rational(chi[i]) * xi[i];
  return acc;
}

std::vector<Rational> coordinate_weights(const ConeVariety& v, const ReebVector& xi) {
  return v.weights.coordinate_weights(xi);
}

bool reeb_cone_contains(const ConeVariety& v, const ReebVector& xi) {
  for (const Rational& a : coordinate_weights(v, xi))
    if (a <= 0) return false;
  return true;
}

Character fcharacter(const ConeVariety& v) {
  if (v.fsupport.empty())
    throw PreconditionError("ambient space has no defining polynomial");
  Character chi = v.weights.monomial_character(v.fsupport.front());
  for (std::size_t k = 1; k < v.fsupport.size(); ++k) {
    if (v.weights.monomial_character(v.fsupport[k]) != chi)
      throw PreconditionError(
          "defining polynomial is not semi-invariant: its monomials carry "
          "different characters");
  }
  return chi;
}

Rational degree(const ConeVariety& v, const ReebVector& xi) {
  return pair_character(fcharacter(v), xi);
}

Rational canonical_weight(const ConeVariety& v, const ReebVector& xi) {
  Rational sum(0);
  for (const Rational& a : coordinate_weights(v, xi)) sum += a;
  if (!v.is_hypersurface()) return sum;
  return sum - degree(v, xi);
}

BigInt monomial_direction_weight(const Monomial& mono, const std::vector<BigInt>& w) {
  if (mono.size() != w.size())
    throw PreconditionError("direction length does not match monomial length");
  BigInt acc(0);
  for (std::size_t i = 0; i < mono.size(); ++i) acc += w[i] * mono[i];
  return acc;
}

std::optional<Rational> direction_degree(const ConeVariety& v, const Direction& w) {
  if (v.fsupport.empty()) return Rational(0);
  if (w.size() != v.num_coords())
    throw PreconditionError("direction length does not match N");
  const auto pairing = [&](const Monomial& mono) {
    Rational acc(0);
    for (std::size_t i = 0; i < mono.size(); ++i) acc += w[i] * mono[i];
    return acc;
  };
  const Rational d = pairing(v.fsupport.front());
  for (std::size_t k = 1; k < v.fsupport.size(); ++k)
    if (pairing(v.fsupport[k]) != d) return std::nullopt;
  return d;
}

namespace {

constexpr long kEnumerationCap = 10000;

// Counts ambient monomials of each weight <= cutoff by direct enumeration of
// exponent tuples.
std::map<long, BigInt> ambient_counts(const std::vector<long>& a, long cutoff) {
  std::map<long, BigInt> counts;
  long points = 0;
  std::function<void(std::size_t, long)> walk = [&](std::size_t idx, long used) {
    if (idx == a.size()) {
      if (++points > kEnumerationCap)
        throw PreconditionError(
            "hilbert_count_bruteforce: lattice enumeration exceeds 10^4 points");
      counts[used] += 1;
      return;
    }
    for (long k = 0; used + k * a[idx] <= cutoff; ++k) walk(idx + 1, used + k * a[idx]);
  };
  walk(0, 0);
  return counts;
}

}  // namespace

std::map<long, BigInt> hilbert_count_bruteforce(const ConeVariety& v,
                                                const ReebVector& xi,
                                                long cutoff) {
  if (cutoff < 0) throw PreconditionError("negative cutoff");
  const auto weights = coordinate_weights(v, xi);
  std::vector<long> a;
  a.reserve(weights.size());
  for (const Rational& w : weights) {
    if (!is_integer(w) || w < 1)
      throw PreconditionError(
          "brute-force Hilbert counts need integer coordinate weights >= 1");
    a.push_back(static_cast<long>(numerator(w)));
  }
  auto amb = ambient_counts(a, cutoff);
  std::map<long, BigInt> dims;
  if (!v.is_hypersurface()) {
    for (long w = 0; w <= cutoff; ++w) {
      auto it = amb.find(w);
      dims[w] = (it == amb.end()) ? BigInt(0) : it->second;
    }
    return dims;
  }
  const Rational d = degree(v, xi);
  const long dw = static_cast<long>(numerator(d));  // integer because xi is
  for (long w = 0; w <= cutoff; ++w) {
    BigInt full = amb.count(w) ? amb[w] : BigInt(0);
    BigInt torsion = (w >= dw && amb.count(w - dw)) ? amb[w - dw] : BigInt(0);
    dims[w] = full - torsion;
  }
  return dims;
}

}  // namespace kstab
