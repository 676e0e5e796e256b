#include <doctest.h>

#include "twinrep/error.hpp"
#include "twinrep/reps.hpp"
#include "twinrep/scalar_io.hpp"

using namespace twinrep;
using namespace twinrep::reps;
using exact::Rat;
using exact::Scalar;
using la::Matrix;

namespace {

Scalar entry(const la::Matrix& m, size_t i, size_t j) { return m.at(i, j); }

std::string s(const Scalar& x) { return exact::to_string(x); }

}  // namespace

TEST_CASE("catalog shapes") {
  CHECK(catalog().size() == 34);  // 11 tau + 14 delta + 5 gamma + 4 classical

  const auto& t7 = family(FamilyId::T7);
  CHECK(t7.params.empty());
  CHECK(s(entry(t7.core_m, 0, 0)) == "1");
  CHECK(s(entry(t7.core_m, 1, 1)) == "-1");
  CHECK(s(entry(t7.core_m, 2, 2)) == "-1");

  const auto& v1 = family(FamilyId::V1);
  CHECK(s(entry(v1.core_m, 1, 1)) == "e");
  CHECK(s(entry(v1.core_m, 1, 2)) == "(-e^2 + 1)/(h)");
  CHECK(s(entry(v1.core_m, 2, 1)) == "h");
  CHECK(s(entry(v1.core_m, 2, 2)) == "-e");
  REQUIRE(v1.core_n.has_value());
  CHECK(s(entry(*v1.core_n, 1, 2)) == "p");
  CHECK(s(entry(*v1.core_n, 2, 1)) == "(1)/(p)");
  bool h_nonzero = false, p_nonzero = false, e_free = false;
  for (const auto& p : v1.params) {
    if (p.name == "h") h_nonzero = p.nonzero;
    if (p.name == "p") p_nonzero = p.nonzero;
    if (p.name == "e") e_free = !p.nonzero;
  }
  CHECK(h_nonzero);
  CHECK(p_nonzero);
  CHECK(e_free);

  const auto& w3 = family(FamilyId::W3);
  REQUIRE(w3.core_n.has_value());
  CHECK(w3.core_m == *w3.core_n);
  CHECK(s(entry(w3.core_m, 1, 0)) == "(1)/(p)");
  CHECK(s(entry(w3.core_m, 1, 1)) == "-1");
  CHECK(s(entry(w3.core_m, 1, 2)) == "p");

  CHECK_THROWS_AS(family_from_string("T12"), Error);
}

TEST_CASE("every catalog core is involutive symbolically (except braid cores)") {
  for (const auto& d : catalog()) {
    if (d.tag == groups::GroupTag::B) continue;
    INFO("family ", to_string(d.id));
    CHECK(d.core_m * d.core_m == Matrix::identity(d.core_m.dim()));
    if (d.core_n) CHECK(*d.core_n * *d.core_n == Matrix::identity(d.core_n->dim()));
  }
}

TEST_CASE("build_rep") {
  SUBCASE("T1 at d=2, f=3 embeds the block at positions 1..3") {
    LocalRep rep = build_rep(FamilyId::T1, "d=2,f=3", 4);
    CHECK(rep.dim == 5);
    auto pres = groups::presentation(groups::GroupTag::T, 4);
    CHECK(pres.generators.size() == 3);
    for (const auto& g : pres.generators) {
      Matrix img = rep.image(g);
      CHECK(img.dim() == 5);
      size_t off = static_cast<size_t>(g.index) - 1;
      CHECK(img.at(off + 1, off + 0) == Scalar::integer(2));
      CHECK(img.at(off + 1, off + 1) == Scalar::integer(-1));
      CHECK(img.at(off + 1, off + 2) == Scalar::integer(3));
      CHECK(img.at(off + 0, off + 0).is_one());
    }
  }

  SUBCASE("T9 is the trivial representation") {
    for (int n = 4; n <= 6; n++) {
      LocalRep rep = build_rep(FamilyId::T9, "", n);
      for (const auto& g : groups::presentation(groups::GroupTag::T, n).generators)
        CHECK(rep.image(g).is_identity());
    }
  }

  SUBCASE("Burau at symbolic t, n=3") {
    const auto& desc = family(FamilyId::BURAU);
    LocalRep rep = build_rep(FamilyId::BURAU, {{"t", Scalar::param(desc.ctx, "t")}}, 3);
    CHECK(rep.dim == 3);
    Matrix s1 = rep.image(groups::Generator{groups::GenKind::Sigma, 1, 1});
    CHECK(s(s1.at(0, 0)) == "-t + 1");
    CHECK(s(s1.at(0, 1)) == "t");
    CHECK(s1.at(1, 0).is_one());
    CHECK(s1.at(1, 1).is_zero());
    CHECK(s1.at(2, 2).is_one());
  }

  SUBCASE("constraint violations") {
    CHECK_THROWS_AS(build_rep(FamilyId::V1, "e=1,h=0,p=2", 4), Error);
    CHECK_THROWS_AS(build_rep(FamilyId::N2, "f=0", 4), Error);
    CHECK_THROWS_AS(build_rep(FamilyId::T1, "q=1", 4), Error);
    // radicand 1 - f*h = -1 at f=2, h=1: inadmissible
    CHECK_THROWS_AS(build_rep(FamilyId::T2, "f=2,h=1", 4), Error);
  }

  SUBCASE("admissible radical specialization") {
    LocalRep rep = build_rep(FamilyId::T2, "f=3,h=1/4", 4);  // radicand 1/4
    CHECK(rep.core_m.at(1, 1) == Scalar::rational(Rat(-1, 2)));
    CHECK(rep.core_m.at(2, 2) == Scalar::rational(Rat(1, 2)));
  }

  SUBCASE("partial substitution keeps other parameters symbolic") {
    LocalRep rep = build_rep(FamilyId::V1, "e=1", 4);
    CHECK(rep.core_m.at(1, 1).is_one());
    CHECK(rep.core_m.at(1, 2).is_zero());  // (1-e^2)/h at e=1
    CHECK(s(rep.core_m.at(2, 1)) == "h");
  }

  SUBCASE("parameter value referencing another parameter (d = 1/p)") {
    const auto& desc = family(FamilyId::V3);
    LocalRep rep = build_rep(FamilyId::V3, {{"d", exact::parse_scalar(desc.ctx, "1/p")}}, 4);
    // M3 collapses onto N3: (2,3) entry 2p - dp^2 = p
    CHECK(rep.core_m == *rep.core_n);
  }
}

TEST_CASE("match_family") {
  auto constant_core = [](std::initializer_list<std::initializer_list<int>> rows) {
    Matrix m(3);
    size_t i = 0;
    for (const auto& row : rows) {
      size_t j = 0;
      for (int v : row) m.at(i, j++) = Scalar::integer(v);
      i++;
    }
    return m;
  };

  SUBCASE("diag(1,-1,-1) is exactly T7") {
    auto r = match_family(constant_core({{1, 0, 0}, {0, -1, 0}, {0, 0, -1}}), std::nullopt,
                          groups::GroupTag::T);
    CHECK(r.involution_ok);
    REQUIRE(r.matches.size() == 1);
    CHECK(r.matches[0].id == FamilyId::T7);
  }

  SUBCASE("identity is exactly T9") {
    auto r = match_family(constant_core({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), std::nullopt,
                          groups::GroupTag::T);
    bool has_t9 = false;
    for (const auto& m : r.matches) has_t9 |= m.id == FamilyId::T9;
    CHECK(has_t9);
    CHECK(r.matches.size() == 1);
  }

  SUBCASE("T1 core with d=2, f=3") {
    auto r = match_family(constant_core({{1, 0, 0}, {2, -1, 3}, {0, 0, 1}}), std::nullopt,
                          groups::GroupTag::T);
    REQUIRE(r.matches.size() == 1);
    CHECK(r.matches[0].id == FamilyId::T1);
    CHECK(r.matches[0].params.at("d") == Rat(2));
    CHECK(r.matches[0].params.at("f") == Rat(3));
  }

  SUBCASE("non-involution is reported as not-a-solution") {
    auto r = match_family(constant_core({{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}), std::nullopt,
                          groups::GroupTag::T);
    CHECK_FALSE(r.involution_ok);
    CHECK(r.matches.empty());
  }

  SUBCASE("radical family cores match both sign branches") {
    // T2 at f=3, h=1/4 (root 1/2) equals T3 at the same parameters with root -1/2
    LocalRep rep = build_rep(FamilyId::T2, "f=3,h=1/4", 4);
    auto r = match_family(rep.core_m, std::nullopt, groups::GroupTag::T);
    bool has_t2 = false, has_t3 = false;
    for (const auto& m : r.matches) {
      has_t2 |= m.id == FamilyId::T2;
      has_t3 |= m.id == FamilyId::T3;
    }
    CHECK(has_t2);
    CHECK(has_t3);
  }
}

TEST_CASE("build then match recovers the family") {
  struct Case {
    FamilyId id;
    const char* params;
  };
  std::vector<Case> cases = {
      {FamilyId::T1, "d=-2,f=5"},   {FamilyId::T2, "f=3,h=1/4"}, {FamilyId::T4, "b=7,h=-1"},
      {FamilyId::T5, "b=3,d=1/4"},  {FamilyId::T7, ""},          {FamilyId::T10, ""},
      {FamilyId::V1, "e=2,h=3,p=5"},
      {FamilyId::V2, "e=0,d=2,kappa=3"},
      {FamilyId::V3, "d=4,p=1/2"},  {FamilyId::V4, "h=-2,kappa=3"},
      {FamilyId::V5, "b=1,kappa=2"},
      {FamilyId::V7, "p=3"},        {FamilyId::V9, "p=-2"},      {FamilyId::V12, "kappa=5"},
      {FamilyId::V14, ""},
      {FamilyId::W1, "h=2,p=3"},    {FamilyId::W2, "d=5,kappa=1/3"},
      {FamilyId::W3, "p=4"},        {FamilyId::W4, "kappa=-1"},  {FamilyId::W5, ""},
  };
  for (const auto& c : cases) {
    INFO("family ", to_string(c.id), " params ", c.params);
    LocalRep rep = build_rep(c.id, c.params, 4);
    auto r = match_family(rep.core_m, rep.core_n, family(c.id).tag);
    bool found = false;
    for (const auto& m : r.matches) {
      if (m.id != c.id) continue;
      bool params_equal = true;
      for (const auto& [k, v] : parse_params(c.id, c.params))
        params_equal &= m.params.at(k) == v.rational_value();
      found |= params_equal;
    }
    CHECK(found);
  }
}
