#include "doctest.h"

#include <algorithm>
#include <set>
#include <string>

#include "cattorus/lattice.hpp"
#include "oracles.hpp"

using namespace cattorus;

namespace {

std::set<std::string> matrix_set(const std::vector<MatZ>& ms) {
  std::set<std::string> out;
  for (const MatZ& m : ms) out.insert(show(m));
  return out;
}

}  // namespace

TEST_CASE("half Gram splitting reassembles the even form") {
  Lattice d4 = builtin_lattice("D4");
  CHECK(d4.i == d4.j + d4.j.transposed());
  CHECK(d4.i.is_symmetric());
  for (std::size_t k = 0; k < 4; ++k) CHECK(d4.j.at(k, k) == 1);
  CHECK_THROWS_AS(lattice_from_i("bad", MatZ{{Int(1)}}), OddLatticeError);
}

TEST_CASE("unimodularity is read off the Gram determinant") {
  CHECK(det(MatZ{{Int(2)}}) == 2);
  CHECK(det(MatZ{{Int(0), Int(1)}, {Int(1), Int(0)}}) == -1);
  CHECK(det(MatZ::identity(3)) == 1);
  CHECK_FALSE(builtin_lattice("A1").is_unimodular());
  CHECK(builtin_lattice("U").is_unimodular());
  CHECK(builtin_lattice("E8").is_unimodular());
}

TEST_CASE("positive definiteness distinguishes root forms from U") {
  CHECK(builtin_lattice("A2").is_positive_definite());
  CHECK(builtin_lattice("E8").is_positive_definite());
  CHECK_FALSE(builtin_lattice("U").is_positive_definite());
}

TEST_CASE("sharp and flat weights are the matrix transposes") {
  Lattice a1 = builtin_lattice("A1");
  CHECK(a1.j_sharp(VecZ{Int(1)}) == VecZ{Int(1)});
  Lattice a2 = builtin_lattice("A2");
  CHECK(a2.j_sharp(VecZ{Int(1), Int(0)}) == (VecZ{Int(1), Int(-1)}));
  CHECK(a2.j_flat(VecZ{Int(1), Int(0)}) == (VecZ{Int(1), Int(0)}));
  CHECK(a2.i_sharp(VecZ{Int(1), Int(0)}) == (VecZ{Int(2), Int(-1)}));
  CHECK(a2.j_sharp(VecZ::zero(2)).is_zero());
}

TEST_CASE("short vector enumeration hits the expected shell sizes") {
  auto a1 = vectors_by_half_norm(builtin_lattice("A1"), 1);
  CHECK(a1[0].size() == 1);
  CHECK(a1[1].size() == 2);

  auto a2 = vectors_by_half_norm(builtin_lattice("A2"), 1);
  CHECK(a2[0].size() + a2[1].size() == 7);

  auto e8 = vectors_by_half_norm(builtin_lattice("E8"), 1);
  CHECK(e8[0].size() + e8[1].size() == 241);

  CHECK_THROWS_AS(vectors_by_half_norm(builtin_lattice("U"), 1),
                  std::invalid_argument);
}

TEST_CASE("theta counts match the independent coordinate models") {
  for (const char* name : {"A1", "A1xA1", "A2", "D4"}) {
    Lattice lat = builtin_lattice(name);
    auto engine = theta_counts(lat, 6);
    auto model = oracle::euclidean_theta(name, 6);
    CAPTURE(name);
    CHECK(engine == model);
  }
  CHECK(theta_counts(builtin_lattice("A1"), 4) ==
        (std::vector<Int>{Int(1), Int(2), Int(0), Int(0), Int(2)}));
  CHECK(oracle::euclidean_theta("E8", 2) ==
        (std::vector<Int>{Int(1), Int(240), Int(2160)}));
}

TEST_CASE("isometry groups agree with the bounded entry search") {
  for (const char* name : {"A1", "A1xA1", "A2", "U"}) {
    Lattice lat = builtin_lattice(name);
    auto engine = isometry_group(lat);
    auto brute = oracle::bounded_isometries(lat);
    CAPTURE(name);
    CHECK(engine.size() == brute.size());
    CHECK(matrix_set(engine) == matrix_set(brute));
  }
  CHECK(isometry_group(builtin_lattice("A1")).size() == 2);
  CHECK(isometry_group(builtin_lattice("A2")).size() == 12);
  CHECK(isometry_group(builtin_lattice("U")).size() == 4);
}

TEST_CASE("two torsion quadratic form and its automorphisms") {
  Lattice a1 = builtin_lattice("A1");
  CHECK(phi_mod2(a1, VecZ{Int(0)}) == 0);
  CHECK(phi_mod2(a1, VecZ{Int(1)}) == 1);
  CHECK(orthogonal_mod2(a1).size() == 1);

  Lattice u = builtin_lattice("U");
  CHECK(phi_mod2(u, VecZ{Int(1), Int(0)}) == 0);
  CHECK(phi_mod2(u, VecZ{Int(0), Int(1)}) == 0);
  CHECK(phi_mod2(u, VecZ{Int(1), Int(1)}) == 1);
  CHECK(orthogonal_mod2(u).size() == 2);

  CHECK(f2_vectors(2).size() == 4);
  CHECK(f2_vectors(0).size() == 1);
}

TEST_CASE("json lattice input accepts both Gram conventions") {
  Lattice j = lattice_from_json_text(
      R"({"name":"a2j","rank":2,"gram_is":"J","gram":[[1,-1],[0,1]]})");
  CHECK(j.i == builtin_lattice("A2").i);

  Lattice i = lattice_from_json_text(
      R"({"name":"a2i","rank":2,"gram_is":"I","gram":[[2,-1],[-1,2]]})");
  CHECK(i.i == builtin_lattice("A2").i);

  CHECK_THROWS_AS(lattice_from_json_text(
                      R"({"name":"odd","rank":1,"gram_is":"I","gram":[[3]]})"),
                  OddLatticeError);
  CHECK_THROWS_AS(lattice_from_json_text(R"({"rank":2})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(resolve_lattice("nosuch"), std::invalid_argument);
  CHECK(resolve_lattice("D4").name == "D4");
}
