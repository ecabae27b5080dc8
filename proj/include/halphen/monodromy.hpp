#pragma once

#include "halphen/matrix.hpp"
#include "halphen/report.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <set>

namespace halphen {

/// Tuple (A_1, ..., A_r) of invertible m x m matrices with product identity.
struct MatrixTuple {
    std::vector<Mat> mats;

    explicit MatrixTuple(std::vector<Mat> ms);
    int size() const { return static_cast<int>(mats.size()); }
    int dim() const { return mats.empty() ? 0 : mats[0].rows(); }
    bool product_is_identity() const;
    long long ext_d() const;
};

struct FrickeData {
    Scalar a1, a2, a3, a4, x, y, z;

    /// LHS - 4 of the Fricke relation; zero iff the relation holds
    Scalar residual() const;
    friend bool operator==(const FrickeData& l, const FrickeData& r) {
        return l.a1 == r.a1 && l.a2 == r.a2 && l.a3 == r.a3 && l.a4 == r.a4 &&
               l.x == r.x && l.y == r.y && l.z == r.z;
    }
    std::string str() const;
};

/// The seven traces of a 4-tuple of 2x2 matrices.
FrickeData fricke_params(const MatrixTuple& t);

enum class BraidGen { b1, b2, b1_inv, b2_inv };

/// beta1: (A1,A2,A3,A4) -> (A2, A2^-1 A1 A2, A3, A4); beta2 acts on (A2,A3).
MatrixTuple braid(const MatrixTuple& t, const std::vector<BraidGen>& word);
FrickeData braid_fricke(const FrickeData& f, const std::vector<BraidGen>& word);

/// Unipotent-triple cases: i has a4 = 2 and an extra scaling N; ii/iii/iv have
/// a4 = 0, 1, -1 with shift a = 2 - a4 = 2, 1, 3.
struct TripleCase {
    enum Tag { i, ii, iii, iv } tag = i;
    long long N = 1; // case i only

    long long shift() const;    // a = 2 - a4 (cases ii-iv)
    long long a4() const;       // 2, 0, 1, -1
    static TripleCase case_i(long long N_) { return {i, N_}; }
};

using Triple = std::array<long long, 3>;

/// case i: (sum n)^2 + N prod n; cases ii-iv: (sum n + a)^2 + prod n
Int unipotent_residual(const Triple& n, const TripleCase& cs);

/// Replace n_i by the other root of the case's quadratic in coordinate i.
Triple vieta_partner(const Triple& n, int i, const TripleCase& cs);

/// Greedy Vieta descent to a |n1|+|n2|+|n3| local minimum, sorted by absolute
/// value.
Triple descend_minimal(const Triple& n, const TripleCase& cs);

/// All descent-fixed negative triples with |n_i| <= B and zero residual; case i
/// ranges over N with gcd(n) = 1 (the proof bounds n1 >= -9/N).
std::vector<std::pair<long long, Triple>> enumerate_minimal(TripleCase::Tag tag, long long B);

struct ConstructedTuple {
    MatrixTuple tuple;
    FrickeData achieved;
    bool exact_match;    // false: the braid-equivalent a4-conjugate root was realized
};

/// Reconstruct a tuple from Fricke data with a1 = a2 = a3 = 2, x != 2:
/// A1 = [[1,1],[0,1]], A2 = [[1,0],[x-2,1]], A3 unipotent solved from the
/// remaining traces ((p-1)^2 = -(y-2)(z-2)/(x-2), possibly in an extension).
ConstructedTuple construct_tuple(const FrickeData& f);

/// Action on degree-2 monomials; tr Sym2(A) = (tr A)^2 - det A.
Mat sym_square_mat(const Mat& a);
MatrixTuple sym_square_tuple(const MatrixTuple& t);

/// Katz middle convolution MC_lambda on a product-identity tuple; the last
/// matrix is the monodromy at infinity and is recomputed after convolving the
/// finite-point matrices. Throws when the middle quotient is trivial.
MatrixTuple middle_convolution(const MatrixTuple& t, const Scalar& lambda);

/// (0,0,0,a4,x,y,z) -> (2,2,2,-a4^2-2,-(x^2-2),-(y^2-2),-(z^2-2))
FrickeData trace_map(const FrickeData& f);

/// Full pipeline fricke_params(MC_{-1}(Sym^2(t))) for a trace-(0,0,0) tuple.
/// For the projective-involution convention (det +1) the symmetric square is
/// reflection-normalized (all four matrices negated), which is Sym^2 of the
/// equivalent true-involution tuple (i A_1, i A_2, i A_3, i A_4).
FrickeData involution_pipeline(const MatrixTuple& t);

struct InvariantForm {
    int dimension = 0;
    enum Sig { definite, indefinite, degenerate } signature = degenerate;
    // basis element H = [[h11, u + v w],[u - v w, h22]], w = sqrt(d), d < 0
    Rat h11, h22, u, v;
    long long d = -1;
};

/// Solve A_i^dagger H A_i = H over hermitian H for a tuple over Q or an
/// imaginary quadratic extension.
InvariantForm invariant_form(const MatrixTuple& t);

struct InverseTraceData {
    Scalar xa2, ya2, za2;   // squares (2-x, 2-y, 2-z) of the preimage traces
    bool form_exists;
    std::string branch;     // which clause decided
};

/// Cor. (ntrace): preimage data for a unipotent-a tuple's Fricke coordinates.
InverseTraceData inverse_trace_data(const FrickeData& f);

struct GoldenTuple {
    std::string name;
    MatrixTuple tuple;
    TripleCase::Tag tag;
    long long N;        // case i
    Triple minimal;     // expected Lemma triple
};

struct NotgeomSamples {
    std::vector<long long> n1;      // family 1 and 3 parameter
    std::vector<long long> a4;      // family 1 parameter
    std::vector<std::pair<long long, long long>> bc; // family 2 parameters
};

Report verify_paper_tuples(const std::vector<GoldenTuple>& tuples, const NotgeomSamples& s);

} // namespace halphen
