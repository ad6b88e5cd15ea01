#include "zcocycle/matrix.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

namespace zcy {

RationalPoint reduce_mod_z2(const RationalPoint& x) {
    return {frac(x.x1), frac(x.x2)};
}

RationalPoint apply_inverse_transpose(const IntMatrix2& gamma, const RationalPoint& x) {
    Int det = gamma.det();
    if (det == 0) throw std::invalid_argument("apply_inverse_transpose: singular matrix");
    // gamma^{-1} = (1/det) [[d,-b],[-c,a]]; x gamma^{-T} dots x with its rows.
    Rational det_q{det};
    Rational y1 = (x.x1 * Rational(gamma.d) - x.x2 * Rational(gamma.b)) / det_q;
    Rational y2 = (-x.x1 * Rational(gamma.c) + x.x2 * Rational(gamma.a)) / det_q;
    return {y1, y2};
}

Int content(const IntMatrix2& gamma) {
    if (!gamma.is_sl2()) throw std::invalid_argument("content: matrix not in SL2(Z)");
    Int g;
    Int am1 = gamma.a - 1;
    mpz_gcd(g.get_mpz_t(), gamma.c.get_mpz_t(), am1.get_mpz_t());
    if (g == 0) throw std::logic_error("content: gcd(0,0) cannot arise for det 1");
    return g;
}

namespace {

Int gcd(const Int& x, const Int& y) {
    Int g;
    mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    return g;
}

}  // namespace

std::vector<RationalPoint> coset_reps(const IntMatrix2& gamma) {
    Int det = gamma.det();
    if (det == 0) throw std::invalid_argument("coset_reps: singular matrix");
    // Rows of gamma^T are (a,c) and (b,d). An HNF basis of the lattice they
    // generate is (g, *), (0, |det|/g) with g = gcd(a,b), so the box
    // [0,g) x [0,|det|/g) is a complete set of representatives.
    Int g = gcd(gamma.a, gamma.b);
    Int t = abs(det) / g;
    std::vector<RationalPoint> reps;
    for (Int i = 0; i < g; ++i)
        for (Int j = 0; j < t; ++j)
            reps.push_back({Rational(i), Rational(j)});
    return reps;
}

bool coset_equivalent(const IntMatrix2& gamma, const RationalPoint& mu, const RationalPoint& nu) {
    RationalPoint diff{mu.x1 - nu.x1, mu.x2 - nu.x2};
    RationalPoint y = apply_inverse_transpose(gamma, diff);
    return is_integer(y.x1) && is_integer(y.x2);
}

Int character_order(const IntMatrix2& gamma, int j) {
    Int det = gamma.det();
    if (det == 0) throw std::invalid_argument("character_order: singular matrix");
    if (j != 1 && j != 2) throw std::invalid_argument("character_order: j must be 1 or 2");
    Int g = j == 1 ? gcd(gamma.b, gamma.d) : gcd(gamma.a, gamma.c);
    return abs(det) / g;
}

IntMatrix2 random_sl2(std::uint64_t seed, int max_word_len) {
    if (max_word_len < 1) throw std::invalid_argument("random_sl2: max_word_len must be >= 1");
    static const IntMatrix2 kLetters[4] = {
        {0, -1, 1, 0},   // S
        {0, 1, -1, 0},   // S^{-1}
        {1, 1, 0, 1},    // T
        {1, -1, 0, 1},   // T^{-1}
    };
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> len_dist(1, max_word_len);
    std::uniform_int_distribution<int> letter_dist(0, 3);
    int len = len_dist(rng);
    IntMatrix2 m = IntMatrix2::identity();
    for (int i = 0; i < len; ++i) m = m * kLetters[letter_dist(rng)];
    return m;
}

std::string render_matrix(const IntMatrix2& m) {
    return m.a.get_str() + "," + m.b.get_str() + "," + m.c.get_str() + "," + m.d.get_str();
}

namespace {

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) parts.push_back(item);
    return parts;
}

}  // namespace

IntMatrix2 parse_matrix(const std::string& s) {
    auto parts = split_commas(s);
    if (parts.size() != 4)
        throw std::invalid_argument("parse_matrix: expected 'a,b,c,d', got '" + s + "'");
    return {Int(parts[0], 10), Int(parts[1], 10), Int(parts[2], 10), Int(parts[3], 10)};
}

std::string render_point(const RationalPoint& x) {
    return render_rational(x.x1) + "," + render_rational(x.x2);
}

RationalPoint parse_point(const std::string& s) {
    auto parts = split_commas(s);
    if (parts.size() != 2)
        throw std::invalid_argument("parse_point: expected 'p/q,r/s', got '" + s + "'");
    return {parse_rational(parts[0]), parse_rational(parts[1])};
}

}  // namespace zcy
