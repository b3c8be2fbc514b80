#ifndef LIEGEN_GENERATORS_HPP
#define LIEGEN_GENERATORS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "liegen/matrix.hpp"

namespace liegen {

/// Shape of the second generator. The first is always x = sum e_{i,i+1}.
enum class Family {
  corner,            // y = e_{n,1}
  double_corner,     // y = e_{n-1,1} + e_{n,2}
  lower_bidiagonal,  // z = sum b_i e_{i+1,i}
  g2_7x7,            // z = -y_1 + y_2 of the 7x7 G2 realization
};

std::string to_string(Family f);
/// Accepts "corner", "double_corner", "lower" / "lower_bidiagonal", "g2" / "g2_7x7".
Family parse_family(std::string_view name);

struct GeneratorPair {
  std::size_t n = 0;
  Matrix first;
  Matrix second;
  Family family = Family::corner;
  std::optional<RationalVector> b;
};

/// x = e_{1,2} + ... + e_{n-1,n}.
Matrix upper_shift(std::size_t n);

/// (x, e_{n,1}) or (x, e_{n-1,1} + e_{n,2}).
GeneratorPair shift_pair(std::size_t n, Family family);

/// (x, z) with z = sum_i b_i e_{i+1,i}; every b_i must be nonzero.
GeneratorPair lower_pair(const RationalVector& b);

/// Which integer plays the role of "n" in b_i = sum_{j<=i} 2^{n-j}.
enum class BVectorConvention {
  matrix_size,  // n = matrix size; gives (8, 12, 14) at size 4
  rank,         // n = rank = size - 1; gives (4, 6, 7) at size 4
};

/// The length n-1 vector b_i = sum_{j=1..i} 2^{N-j}, N chosen by `convention`.
RationalVector doubling_bvector(std::size_t n,
                                BVectorConvention convention = BVectorConvention::matrix_size);

/// x and z = -y_1 + y_2 generating the 7x7 realization of G2.
GeneratorPair g2_pair();

using IntMatrix = std::vector<std::vector<long>>;

IntMatrix cartan_matrix_a(std::size_t rank);
IntMatrix cartan_matrix_g2();

/// Canonical generators x_i, y_i, h_i (0-based lists) with Cartan matrix C,
/// satisfying [h_i,h_j]=0, [h_i,x_j]=C(j,i)x_j, [h_i,y_j]=-C(j,i)y_j,
/// [x_i,y_j]=delta_ij h_i.
struct CanonicalGenerators {
  std::size_t rank = 0;
  std::vector<Matrix> x, y, h;
  IntMatrix cartan;
};

/// One failed relation, named like "[h1,x2]".
struct RelationFailure {
  std::string relation;
};

std::vector<RelationFailure> check_canonical_relations(const CanonicalGenerators& g);

/// The six 7x7 matrices of the G2 realization; throws internal_error if the
/// relation check fails.
CanonicalGenerators g2_canonical();

/// Linear extension of e_{i,j} -> (-1)^{i-j+1} e_{n-j+1,n-i+1}.
Matrix diagram_automorphism(const Matrix& a);

struct CriterionResult {
  bool holds = false;
  RationalVector v;
};

/// v = C b; holds iff the 2l values +-v_i are pairwise distinct.
CriterionResult prop2_criterion(const IntMatrix& cartan, const RationalVector& b);

/// For traceless diagonal h in sl(n): holds iff the values
/// +-(h_ii - h_{i+1,i+1}) are pairwise distinct.
bool prop1_criterion(const Matrix& h);

}  // namespace liegen

#endif
