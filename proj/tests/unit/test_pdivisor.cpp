#include "kstab/pdivisor.hpp"

#include "doctest.h"
#include "kstab/families.hpp"

using namespace kstab;

namespace {

// The reference presentation of the BP(3,2) torus inclusion.
IntMatrix bp32_f() {
  return IntMatrix(4, 2,
                   {BigInt(0), BigInt(1), BigInt(6), BigInt(-1), BigInt(2),
                    BigInt(0), BigInt(3), BigInt(0)});
}

IntMatrix bp32_p() {
  return IntMatrix(2, 4,
                   {BigInt(0), BigInt(0), BigInt(-3), BigInt(2), BigInt(1),
                    BigInt(1), BigInt(-3), BigInt(0)});
}

IntMatrix bp32_s() {
  return IntMatrix(2, 4,
                   {BigInt(0), BigInt(0), BigInt(2), BigInt(-1), BigInt(1),
                    BigInt(0), BigInt(0), BigInt(0)});
}

}  // namespace

TEST_SUITE_BEGIN("pdivisor");

TEST_CASE("cokernel and splitting from Smith normal form") {
  const auto data = cokernel_and_splitting(bp32_f());
  CHECK((data.p * data.f).is_zero());
  CHECK(data.s * data.f == IntMatrix::identity(2));

  // The reference choice validates as well.
  const auto paper = exact_sequence_with_splitting(bp32_f(), bp32_p(), bp32_s());
  CHECK((paper.p * paper.f).is_zero());
  CHECK(paper.s * paper.f == IntMatrix::identity(2));
}

TEST_CASE("identity embedding has empty-feeling cokernel data") {
  IntMatrix f(3, 2,
              {BigInt(1), BigInt(0), BigInt(0), BigInt(1), BigInt(0), BigInt(0)});
  const auto data = cokernel_and_splitting(f);
  CHECK(data.p.rows() == 1);
  CHECK((data.p * data.f).is_zero());
  CHECK(data.s * data.f == IntMatrix::identity(2));
}

TEST_CASE("torsion cokernel is rejected") {
  IntMatrix f(3, 2,
              {BigInt(2), BigInt(0), BigInt(0), BigInt(1), BigInt(0), BigInt(0)});
  CHECK_THROWS_AS(cokernel_and_splitting(f), PreconditionError);
}

TEST_CASE("tail cone of BP(3,2)") {
  const auto data = cokernel_and_splitting(bp32_f());
  const auto sigma = tail_cone(data);
  CHECK(sigma == std::vector<std::vector<BigInt>>{{BigInt(1), BigInt(0)},
                                                  {BigInt(1), BigInt(6)}});
  const auto dual = dual_tail_cone(data);
  CHECK(dual == std::vector<std::vector<BigInt>>{{BigInt(0), BigInt(1)},
                                                 {BigInt(6), BigInt(-1)}});
}

TEST_CASE("tail cone is the closure of the presentation Reeb cone") {
  for (const auto& inst :
       {make_family(Family::BP, 3, 2), make_family(Family::BP, 4, 2),
        make_family(Family::BP, 6, 4)}) {
    const auto pd = family_pdivisor(inst);
    // Reeb cone closure from the weight matrix, in the same ordering as the
    // registered presentation (columns of F list the torus actions).
    RationalMatrix rows;
    for (unsigned i = 0; i < pd.data.f.rows(); ++i) {
      RationalVector row(2);
      row[0] = Rational(pd.data.f.at(i, 0));
      row[1] = Rational(pd.data.f.at(i, 1));
      rows.push_back(std::move(row));
    }
    CHECK(tail_cone(pd.data) == cone_extreme_rays(rows, 2));
  }
}

TEST_CASE("coefficient polytopes of the reference BP(3,2) presentation") {
  const auto data = exact_sequence_with_splitting(bp32_f(), bp32_p(), bp32_s());
  const auto groups = downstairs_rays(data);
  REQUIRE(groups.size() == 3);

  const auto find_group = [&](std::vector<unsigned> coords) {
    for (const auto& g : groups)
      if (g.coords == coords) return g;
    FAIL("missing coordinate group");
    return groups[0];
  };

  // u, v map to the ray (0,1); z to (-1,-1); w to (1,0).
  const auto g_uv = find_group({0, 1});
  CHECK(g_uv.ray == std::vector<BigInt>{BigInt(0), BigInt(1)});
  const auto g_z = find_group({2});
  CHECK(g_z.ray == std::vector<BigInt>{BigInt(-1), BigInt(-1)});
  const auto g_w = find_group({3});
  CHECK(g_w.ray == std::vector<BigInt>{BigInt(1), BigInt(0)});

  // Delta_(0,1) = {0} x [0,1] + sigma, so Psi_(0,1)(s,t) = min{t, 0}.
  const auto delta_uv = delta_polytope(data, g_uv.ray);
  REQUIRE(delta_uv.has_value());
  CHECK(delta_uv->vertices ==
        std::vector<RationalVector>{{Rational(0), Rational(0)},
                                    {Rational(0), Rational(1)}});
  const auto psi_uv = support_function(*delta_uv);
  CHECK(psi_uv.eval({Rational(0), Rational(1)}) == Rational(0));
  CHECK(psi_uv.eval({Rational(6), Rational(-1)}) == Rational(-1));
  CHECK(psi_uv.eval({Rational(3), Rational(2)}) == Rational(0));

  // Psi_(1,0) has slope -bm/q = -1/2 and Psi_(-1,-m) has slope am/p = 2/3
  // for the reference splitting with (a, b) = (2, 1).
  const auto delta_w = delta_polytope(data, g_w.ray);
  REQUIRE(delta_w.has_value());
  CHECK(delta_w->vertices ==
        std::vector<RationalVector>{{Rational(-1, 2), Rational(0)}});
  const auto delta_z = delta_polytope(data, g_z.ray);
  REQUIRE(delta_z.has_value());
  CHECK(delta_z->vertices ==
        std::vector<RationalVector>{{Rational(2, 3), Rational(0)}});

  // Every coefficient shares the tail cone.
  CHECK(delta_uv->rays == tail_cone(data));
  CHECK(delta_w->rays == tail_cone(data));
}

TEST_CASE("splitting independence up to lattice translation") {
  const auto canonical = cokernel_and_splitting(bp32_f());
  const auto paper = exact_sequence_with_splitting(bp32_f(), bp32_p(), bp32_s());
  // Downstairs labels differ between presentations, so match coefficient
  // polytopes through the coordinate groups.
  const auto groups_c = downstairs_rays(canonical);
  const auto groups_p = downstairs_rays(paper);
  REQUIRE(groups_c.size() == groups_p.size());
  for (const auto& gc : groups_c) {
    for (const auto& gp : groups_p) {
      if (gc.coords != gp.coords) continue;
      const auto dc = delta_polytope(canonical, gc.ray);
      const auto dp = delta_polytope(paper, gp.ray);
      REQUIRE(dc.has_value());
      REQUIRE(dp.has_value());
      CHECK(canonical_translate(*dc).vertices ==
            canonical_translate(*dp).vertices);
    }
  }
}

TEST_CASE("slope report for BP(3,2)") {
  const auto pd = family_pdivisor(make_family(Family::BP, 3, 2));
  const auto report = slope_integrality_report(pd);
  CHECK(report.count_nontrivial_bound == 2);
  unsigned multi = 0, nonintegral = 0;
  for (const auto& e : report.entries) {
    if (e.cls == CoefficientClass::MultiVertex) {
      ++multi;
      CHECK(e.multiplicity == 1);  // gcd(3,2) = 1
    }
    if (e.cls == CoefficientClass::NonIntegralVertex) ++nonintegral;
  }
  CHECK(multi == 1);
  CHECK(nonintegral == 2);
}

TEST_CASE("slope report with one integral slope still bounds by two") {
  // BP(4,2): m = 2, the w-coefficient has integral slope and reduces away,
  // leaving one non-integral slope and the multi-vertex class.
  const auto pd = family_pdivisor(make_family(Family::BP, 4, 2));
  const auto report = slope_integrality_report(pd);
  CHECK(report.count_nontrivial_bound == 2);
  unsigned integral = 0;
  unsigned multiplicity_m = 0;
  for (const auto& e : report.entries) {
    if (e.cls == CoefficientClass::LatticeTranslate) ++integral;
    if (e.cls == CoefficientClass::MultiVertex) multiplicity_m = e.multiplicity;
  }
  CHECK(integral == 1);
  CHECK(multiplicity_m == 2);  // gcd(4,2)
}

TEST_CASE("purely integral linear data has bound zero") {
  PDivisor pd;
  pd.data = cokernel_and_splitting(bp32_f());
  Polyhedron single;
  single.vertices = {{Rational(2), Rational(-1)}};
  single.rays = tail_cone(pd.data);
  pd.entries.push_back({RayGroup{{BigInt(1), BigInt(0)}, {0}}, single, 1});
  pd.entries.push_back({RayGroup{{BigInt(0), BigInt(1)}, {1}}, single, 3});
  const auto report = slope_integrality_report(pd);
  CHECK(report.count_nontrivial_bound == 0);
}

TEST_SUITE_END();
