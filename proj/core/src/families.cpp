#include "kstab/families.hpp"

#include <numeric>
#include <sstream>

namespace kstab {

std::string to_string(Family f) {
  switch (f) {
    case Family::BP: return "BP";
    case Family::YY2: return "YY2";
    case Family::YY3: return "YY3";
  }
  return "?";
}

Family family_from_string(const std::string& name) {
  std::string lower;
  for (char c : name) lower.push_back(static_cast<char>(std::tolower(c)));
  if (lower == "bp" || lower == "i") return Family::BP;
  if (lower == "yy2" || lower == "ii") return Family::YY2;
  if (lower == "yy3" || lower == "iii") return Family::YY3;
  throw PreconditionError("unknown family '" + name + "' (expected bp, yy2 or yy3)");
}

std::string FamilyInstance::label() const {
  std::ostringstream os;
  os << to_string(family) << "(" << p << "," << q << ")";
  return os.str();
}

namespace {

TorusWeights rank2_weights(std::vector<BigInt> second_row) {
  std::vector<std::vector<BigInt>> rows;
  rows.push_back({BigInt(1), BigInt(-1), BigInt(0), BigInt(0)});
  rows.push_back(std::move(second_row));
  return TorusWeights(2, 4, std::move(rows));
}

Monomial mono(long u, long v, long z, long w) { return {u, v, z, w}; }

std::vector<BigInt> dir(long a, long b, long c, long d) {
  return {BigInt(a), BigInt(b), BigInt(c), BigInt(d)};
}

}  // namespace

FamilyInstance make_family(Family f, long p, long q) {
  if (p < 2 || q < 2)
    throw PreconditionError("family parameters need p, q >= 2");
  if (f == Family::BP && std::max(p, q) <= 2)
    throw PreconditionError("BP(2,2) is excluded: max(p,q) > 2 is required");

  const std::vector<std::string> names = {"u", "v", "z", "w"};

  switch (f) {
    case Family::BP: {
      const long m = std::gcd(p, q);
      ConeVariety variety = ConeVariety::hypersurface(
          rank2_weights({BigInt(0), BigInt(p * q / m), BigInt(q / m), BigInt(p / m)}),
          {mono(1, 1, 0, 0), mono(0, 0, p, 0), mono(0, 0, 0, q)}, names);
      std::vector<TestConfiguration> tcs = {
          make_test_configuration(variety, dir(0, 0, 1, 0),
                                  Normality::KnownFamily, "X1"),
          make_test_configuration(variety, dir(0, 0, 0, 1),
                                  Normality::KnownFamily, "X2")};
      return FamilyInstance{f,
                            p,
                            q,
                            std::move(variety),
                            std::move(tcs),
                            {2 * q > p, 2 * p > q, "2p > q and 2q > p"},
                            {Rational(1), Rational(m)}};
    }
    case Family::YY2: {
      ConeVariety variety = ConeVariety::hypersurface(
          rank2_weights({BigInt(0), BigInt(p * q), BigInt(q), BigInt(p - 1)}),
          {mono(1, 1, 0, 0), mono(0, 0, p, 0), mono(0, 0, 1, q)}, names);
      std::vector<TestConfiguration> tcs = {
          make_test_configuration(variety, dir(0, 0, 0, 1),
                                  Normality::KnownFamily, "X1"),
          make_test_configuration(variety, dir(0, 0, q, -1),
                                  Normality::KnownFamily, "X2")};
      return FamilyInstance{f,
                            p,
                            q,
                            std::move(variety),
                            std::move(tcs),
                            {3 * (p - 1) > q + p - 1, 2 * q * p + 1 > p * p + q,
                             "3(p-1) > q+p-1 and 2qp+1 > p^2+q"},
                            {Rational(1), Rational(1)}};
    }
    case Family::YY3: {
      ConeVariety variety = ConeVariety::hypersurface(
          rank2_weights({BigInt(0), BigInt(p * q - 1), BigInt(q - 1), BigInt(p - 1)}),
          {mono(1, 1, 0, 0), mono(0, 0, p, 1), mono(0, 0, 1, q)}, names);
      std::vector<TestConfiguration> tcs = {
          make_test_configuration(variety, dir(0, 0, -1, p),
                                  Normality::KnownFamily, "X1"),
          make_test_configuration(variety, dir(0, 0, q, -1),
                                  Normality::KnownFamily, "X2")};
      return FamilyInstance{
          f,
          p,
          q,
          std::move(variety),
          std::move(tcs),
          {3 * (p - 1) * (p - 1) * (q - 1) > (p + q - 2) * (p * q - 2 * p + 1),
           3 * (q - 1) * (q - 1) * (p - 1) > (p + q - 2) * (p * q - 2 * q + 1),
           "3(p-1)^2(q-1) > (p+q-2)(pq-2p+1) and 3(q-1)^2(p-1) > "
           "(p+q-2)(pq-2q+1)"},
          {Rational(1), Rational(1)}};
    }
  }
  throw PreconditionError("unknown family");
}

long link_topology(Family f, long p, long q) {
  if (p < 2 || q < 2) throw PreconditionError("link topology needs p, q >= 2");
  switch (f) {
    case Family::BP: return std::gcd(p, q) - 1;
    case Family::YY2: return std::gcd(p - 1, q);
    case Family::YY3: return std::gcd(p - 1, q - 1) + 1;
  }
  throw PreconditionError("unknown family");
}

namespace {

// x*a + y*b = gcd(a,b)
void extended_gcd(long a, long b, long& x, long& y) {
  if (b == 0) {
    x = 1;
    y = 0;
    return;
  }
  long x1, y1;
  extended_gcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
}

}  // namespace

PDivisor family_pdivisor(const FamilyInstance& inst) {
  if (inst.family == Family::BP) {
    const long p = inst.p, q = inst.q;
    const long m = std::gcd(p, q);
    // a (q/m) - b (p/m) = 1 fixes the registered splitting; a is normalized
    // into [0, p/m) so the choice is reproducible.
    long a, y;
    extended_gcd(q / m, p / m, a, y);
    (void)y;
    a = ((a % (p / m)) + (p / m)) % (p / m);
    const long b = (a * (q / m) - 1) / (p / m);
    IntMatrix f(4, 2,
                {BigInt(0), BigInt(1),                //
                 BigInt(p * q / m), BigInt(-1),       //
                 BigInt(q / m), BigInt(0),            //
                 BigInt(p / m), BigInt(0)});
    IntMatrix proj(2, 4,
                   {BigInt(0), BigInt(0), BigInt(-p / m), BigInt(q / m),  //
                    BigInt(1), BigInt(1), BigInt(-p), BigInt(0)});
    IntMatrix split(2, 4,
                    {BigInt(0), BigInt(0), BigInt(a), BigInt(-b),  //
                     BigInt(1), BigInt(0), BigInt(0), BigInt(0)});
    PDivisor pd = build_pdivisor(
        exact_sequence_with_splitting(std::move(f), std::move(proj), std::move(split)));
    // The coefficient shared by u and v sits over the base points where the
    // curve meets the corresponding divisor: gcd(p,q) of them.
    for (auto& entry : pd.entries)
      if (entry.group.coords == std::vector<unsigned>{0, 1})
        entry.multiplicity = static_cast<unsigned>(m);
    return pd;
  }
  // Canonical splitting for the other families; multiplicities default to 1.
  const TorusWeights& w = inst.variety.weights;
  IntMatrix f(w.num_coords(), w.rank());
  for (unsigned i = 0; i < w.num_coords(); ++i)
    for (unsigned j = 0; j < w.rank(); ++j) f.at(i, j) = w.entry(j, i);
  return build_pdivisor(cokernel_and_splitting(f));
}

}  // namespace kstab
