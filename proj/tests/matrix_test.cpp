#include <doctest.h>

#include <random>

#include "twinrep/error.hpp"
#include "twinrep/matrix.hpp"
#include "twinrep/scalar_io.hpp"

using namespace twinrep;
using namespace twinrep::exact;
using namespace twinrep::la;

namespace {

Matrix mat3(const Ctx& ctx, const std::string& r1, const std::string& r2, const std::string& r3) {
  auto parse_row = [&](const std::string& row) {
    Vec out;
    size_t start = 0;
    for (size_t i = 0; i <= row.size(); i++) {
      if (i == row.size() || row[i] == ',') {
        out.push_back(parse_scalar(ctx, row.substr(start, i - start)));
        start = i + 1;
      }
    }
    return out;
  };
  return Matrix::from_rows({parse_row(r1), parse_row(r2), parse_row(r3)});
}

Matrix random_const_matrix(size_t dim, std::mt19937_64& rng) {
  std::uniform_int_distribution<long long> c(-4, 4);
  Matrix m(dim);
  for (size_t i = 0; i < dim; i++)
    for (size_t j = 0; j < dim; j++) m.at(i, j) = Scalar::integer(c(rng));
  return m;
}

}  // namespace

TEST_CASE("block_embed shapes") {
  auto ctx = RingContext::make({"t"});
  CHECK(block_embed(Matrix::identity(3), 2, 4) == Matrix::identity(5));

  Matrix burau(2);
  burau.at(0, 0) = parse_scalar(ctx, "1 - t");
  burau.at(0, 1) = parse_scalar(ctx, "t");
  burau.at(1, 0) = Scalar::integer(1);
  Matrix b2 = block_embed(burau, 2, 4);
  CHECK(b2.dim() == 4);
  CHECK(b2.at(0, 0).is_one());
  CHECK(b2.at(1, 1) == parse_scalar(ctx, "1 - t"));
  CHECK(b2.at(1, 2) == parse_scalar(ctx, "t"));
  CHECK(b2.at(2, 1).is_one());
  CHECK(b2.at(2, 2).is_zero());
  CHECK(b2.at(3, 3).is_one());

  Matrix m7(3);
  m7.at(0, 0) = Scalar::integer(1);
  m7.at(1, 1) = Scalar::integer(-1);
  m7.at(2, 2) = Scalar::integer(-1);
  Matrix e = block_embed(m7, 1, 4);
  for (size_t i = 0; i < 5; i++)
    CHECK(e.at(i, i) == Scalar::integer(i == 1 || i == 2 ? -1 : 1));

  CHECK_THROWS_AS(block_embed(m7, 0, 4), Error);
  CHECK_THROWS_AS(block_embed(m7, 4, 4), Error);
}

TEST_CASE("involutions square to the identity symbolically") {
  auto ctx0 = RingContext::make({"f", "h", "p"});
  auto ctx = ctx0->adjoin_radical("r", parse_scalar(ctx0, "1 - f*h"));
  Matrix m2 = mat3(ctx, "1,0,0", "0,0-r,f", "0,h,r");
  CHECK(m2 * m2 == Matrix::identity(3));
  Matrix n1 = mat3(ctx, "1,0,0", "0,0,p", "0,1/p,0");
  CHECK(n1 * n1 == Matrix::identity(3));
}

TEST_CASE("inverse") {
  auto ctx = RingContext::make({"t"});
  Matrix d = mat3(ctx, "1,0,0", "0,0-1,0", "0,0,0-1");
  CHECK(inverse(d) == d);

  Matrix burau2 = mat3(ctx, "1-t,t,0", "1,0,0", "0,0,1");
  Matrix inv = inverse(burau2);
  CHECK(burau2 * inv == Matrix::identity(3));
  CHECK(inv * burau2 == Matrix::identity(3));

  Matrix sing = mat3(ctx, "1,2,3", "2,4,6", "0,0,1");
  CHECK_THROWS_WITH_AS(inverse(sing), "singular matrix", Error);
  CHECK(det(sing).is_zero());
}

TEST_CASE("char_poly of diag(1,-1,-1) is (x-1)(x+1)^2") {
  auto ctx = RingContext::make({});
  Matrix d = mat3(ctx, "1,0,0", "0,0-1,0", "0,0,0-1");
  auto c = char_poly(d);
  REQUIRE(c.size() == 4);
  CHECK(c[3] == Scalar::integer(1));
  CHECK(c[2] == Scalar::integer(1));
  CHECK(c[1] == Scalar::integer(-1));
  CHECK(c[0] == Scalar::integer(-1));
}

TEST_CASE("null_space") {
  auto ctx = RingContext::make({"d", "f"});
  // tau1 factor s1 image minus identity: kernel of -2u1 + f*u2 = 0
  Matrix a = mat3(ctx, "0-2,f,0", "0,0,0", "0,0,0");
  auto spec = ctx->specialized({{"d", Rat(1)}, {"f", Rat(1)}});
  auto basis = null_space(a.specialize(spec));
  REQUIRE(basis.size() == 2);
  // hand row-reduction of -2u1 + u2 = 0: direction (1,2,0) plus free e3
  CHECK(basis[0][0] == Scalar::rational(Rat(1, 2)));
  CHECK(basis[0][1] == Scalar::integer(1));
  CHECK(basis[0][2].is_zero());
  CHECK(basis[1][0].is_zero());
  CHECK(basis[1][1].is_zero());
  CHECK(basis[1][2] == Scalar::integer(1));

  CHECK(null_space(Matrix::identity(4)).empty());
  CHECK_THROWS_AS(null_space(a), Error);  // symbolic input refused
  CHECK(kernel_basis(a).size() == 2);     // generic path allows it
}

TEST_CASE("embedding is multiplicative at a fixed position") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; trial++) {
    Matrix a = random_const_matrix(3, rng);
    Matrix b = random_const_matrix(3, rng);
    size_t n = 4 + trial % 3;
    size_t i = 1 + trial % (n - 1);
    CHECK(block_embed(a * b, i, n) == block_embed(a, i, n) * block_embed(b, i, n));
  }
}

TEST_CASE("blocks three or more apart commute for arbitrary cores") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 20; trial++) {
    Matrix a = random_const_matrix(3, rng);
    Matrix b = random_const_matrix(3, rng);
    size_t n = 6 + trial % 2;
    Matrix ea = block_embed(a, 1, n);
    Matrix eb = block_embed(b, 4 + trial % (n - 4), n);
    CHECK(ea * eb == eb * ea);
  }
}

TEST_CASE("det is multiplicative on 50 random specialized pairs") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 50; trial++) {
    size_t dim = 2 + trial % 4;
    Matrix a = random_const_matrix(dim, rng);
    Matrix b = random_const_matrix(dim, rng);
    CHECK(det(a * b) == det(a) * det(b));
  }
}

TEST_CASE("random inverses satisfy A*inv(A) = I") {
  std::mt19937_64 rng(10);
  int done = 0;
  while (done < 15) {
    size_t dim = 2 + done % 4;
    Matrix a = random_const_matrix(dim, rng);
    if (det(a).is_zero()) continue;
    CHECK(a * inverse(a) == Matrix::identity(dim));
    done++;
  }
}

TEST_CASE("matrix json round-trip") {
  auto ctx0 = RingContext::make({"f", "h"});
  auto ctx = ctx0->adjoin_radical("r", parse_scalar(ctx0, "1 - f*h"));
  Matrix m2 = mat3(ctx, "1,0,0", "0,0-r,f", "0,h,r");
  std::string j = to_json_string(m2);
  CHECK(matrix_from_json_string(ctx, j) == m2);
  CHECK(to_json_string(matrix_from_json_string(ctx, j)) == j);
}
