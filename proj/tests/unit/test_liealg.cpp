#include "doctest.h"
#include "oracles.hpp"
#include "poissonz/liealg.hpp"

using namespace poissonz;

namespace {

std::size_t index_of(const StructureConstants& g, const std::string& label) {
  const auto& l = g.labels();
  auto it = std::find(l.begin(), l.end(), label);
  REQUIRE(it != l.end());
  return static_cast<std::size_t>(it - l.begin());
}

Vec scaled_unit(std::size_t n, std::size_t i, const Rat& c = 1) {
  Vec v(n);
  v[i] = c;
  return v;
}

Rat trace(const Mat& m) {
  Rat t = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

// Structure constants and the trace form must agree with the defining matrices.
void check_against_matrices(const StructureConstants& g, std::uint64_t seed) {
  REQUIRE(g.realization());
  const auto& r = *g.realization();
  Sampler s(seed, 5);
  for (int k = 0; k < 5; ++k) {
    Vec x = s.point(g.dim()), y = s.point(g.dim());
    CHECK(r.element(g.bracket(x, y)) == oracle::commutator(r.element(x), r.element(y)));
  }
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = 0; j < g.dim(); ++j) CHECK(g.trace_form()(i, j) == trace(r.basis[i] * r.basis[j]));
  CHECK_FALSE(g.jacobi_defect());
  CHECK_FALSE(g.antisymmetry_defect());
  CHECK_FALSE(g.trace_form_defect());
}

Mat diag(std::vector<Rat> d) {
  Mat m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

}  // namespace

TEST_CASE("sl2 relations") {
  auto g = build_algebra("sl2");
  REQUIRE(g.dim() == 3);
  std::size_t e = index_of(g, "e"), h = index_of(g, "h"), f = index_of(g, "f");
  CHECK(g.bracket(scaled_unit(3, h), scaled_unit(3, e)) == scaled_unit(3, e, 2));
  CHECK(g.bracket(scaled_unit(3, h), scaled_unit(3, f)) == scaled_unit(3, f, -2));
  CHECK(g.bracket(scaled_unit(3, e), scaled_unit(3, f)) == scaled_unit(3, h));
  check_against_matrices(g, 1);
}

TEST_CASE("classical algebras match their matrices") {
  for (const char* name : {"sl3", "so4", "so5", "sp4", "sl2+so3"}) {
    CAPTURE(name);
    check_against_matrices(build_algebra(name), 2);
  }
}

TEST_CASE("dimensions and sampled index") {
  auto so4 = build_algebra("so4");
  CHECK(so4.dim() == 6);
  CHECK(sampled_index(so4, 5, 1) == 2);
  auto sl3 = build_algebra("sl3");
  CHECK(sampled_index(sl3, 5, 1) == 2);
  CHECK(sl3.rank() == 2);
  CHECK(build_algebra("sp4").dim() == 10);
  CHECK(build_algebra("so5").rank() == 2);
}

TEST_CASE("algebra names parse") {
  auto spec = parse_algebra("sl3+so4");
  REQUIRE(spec.factors.size() == 2);
  CHECK(spec.factors[0].family == 'A');
  CHECK(spec.factors[0].n == 3);
  CHECK_THROWS_AS(parse_algebra("sp3"), Error);
  CHECK_THROWS_AS(parse_algebra("gl3"), Error);
}

TEST_CASE("point-element pairing is the trace form") {
  auto g = build_algebra("sl3");
  Sampler s(8);
  Vec x = s.point(g.dim());
  Vec xi = g.element_to_point(x);
  CHECK(xi == g.trace_form() * x);
  CHECK(g.point_to_element(xi) == x);
}

TEST_CASE("centralizers of diagonal elements") {
  auto sl3 = build_algebra("sl3");
  auto c = centralizer(sl3, sl3.realization()->coordinates(diag({1, 2, -3})));
  CHECK(c.dim == 2);
  CHECK(c.tag == Centralizer::Tag::Regular);

  auto sl4 = build_algebra("sl4");
  for (Rat a : {Rat(1), Rat(5, 2), Rat(-7)}) {
    auto z = centralizer(sl4, sl4.realization()->coordinates(diag({a, 0, 0, -a})));
    CHECK(z.dim == 5);
    CHECK(z.tag == Centralizer::Tag::Subregular);
    for (const auto& b : z.basis)
      CHECK(is_zero(sl4.bracket(b, sl4.realization()->coordinates(diag({a, 0, 0, -a})))));
  }
  CHECK(centralizer(sl4, Vec(15)).dim == 15);
}
