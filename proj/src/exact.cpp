#include "bq/exact.hpp"

#include <sstream>

namespace bq::exact {

namespace {

// Quaternion units 0 = 1, 1 = î, 2 = ĵ, 3 = k̂. Returns (sign, unit) of u·v.
std::pair<int, int> unit_product(int u, int v) {
    if (u == 0) return {1, v};
    if (v == 0) return {1, u};
    if (u == v) return {-1, 0};
    // îĵ = k̂, ĵk̂ = î, k̂î = ĵ; reversed order flips the sign.
    const int third = 6 - u - v;
    const bool cyclic = (u % 3) + 1 == v;
    return {cyclic ? 1 : -1, third};
}

StructureTable build_table() {
    StructureTable t{};
    for (int a = 0; a < 8; ++a) {
        for (int b = 0; b < 8; ++b) {
            auto [sign, unit] = unit_product(a / 2, b / 2);
            int ipow = (a % 2) + (b % 2);
            if (ipow == 2) {
                sign = -sign;
                ipow = 0;
            }
            t[a][b][2 * unit + ipow] = sign;
        }
    }
    return t;
}

using IntVec = std::array<int, 8>;

IntVec int_mul(const IntVec& x, const IntVec& y) {
    const auto& t = structure_table();
    IntVec r{};
    for (int a = 0; a < 8; ++a) {
        for (int b = 0; b < 8; ++b) {
            if (x[a] == 0 || y[b] == 0) continue;
            for (int c = 0; c < 8; ++c) {
                r[c] += t[a][b][c] * x[a] * y[b];
            }
        }
    }
    return r;
}

} // namespace

std::string ExactScalar::str() const {
    if (im == 0) return re.get_str();
    if (re == 0) return im.get_str() + "i";
    std::string s = re.get_str();
    s += im < 0 ? "-" : "+";
    s += Rational(abs(im)).get_str() + "i";
    return s;
}

ExactBiQuat::ExactBiQuat(const ExactScalar& a1, const ExactScalar& a2, const ExactScalar& a3,
                         const ExactScalar& a4) {
    set_coeff(1, a1);
    set_coeff(2, a2);
    set_coeff(3, a3);
    set_coeff(4, a4);
}

void ExactBiQuat::set_coeff(int k, const ExactScalar& z) {
    e[2 * (k - 1)] = z.re;
    e[2 * (k - 1) + 1] = z.im;
}

std::string ExactBiQuat::str() const {
    std::ostringstream out;
    out << '(';
    for (int k = 1; k <= 4; ++k) {
        out << (k > 1 ? ", " : "") << coeff(k).str();
    }
    out << ')';
    return out.str();
}

ExactBiQuat to_exact(const BiQuat& q) {
    ExactBiQuat r;
    for (int k = 1; k <= 4; ++k) {
        r.set_coeff(k, ExactScalar(Rational(q[k].real()), Rational(q[k].imag())));
    }
    return r;
}

BiQuat to_double(const ExactBiQuat& q) {
    return {q.coeff(1).to_complex(), q.coeff(2).to_complex(), q.coeff(3).to_complex(),
            q.coeff(4).to_complex()};
}

const StructureTable& structure_table() {
    static const StructureTable table = build_table();
    return table;
}

ExactBiQuat oracle_mul(const ExactBiQuat& p, const ExactBiQuat& q) {
    const auto& t = structure_table();
    ExactBiQuat r;
    Rational term;
    for (int a = 0; a < 8; ++a) {
        if (sgn(p.e[a]) == 0) continue;
        for (int b = 0; b < 8; ++b) {
            if (sgn(q.e[b]) == 0) continue;
            term = p.e[a] * q.e[b];
            for (int c = 0; c < 8; ++c) {
                if (t[a][b][c] == 1) {
                    r.e[c] += term;
                } else if (t[a][b][c] == -1) {
                    r.e[c] -= term;
                }
            }
        }
    }
    return r;
}

int associative_basis_triples() {
    int count = 0;
    for (int a = 0; a < 8; ++a) {
        for (int b = 0; b < 8; ++b) {
            for (int c = 0; c < 8; ++c) {
                IntVec ea{}, eb{}, ec{};
                ea[a] = 1;
                eb[b] = 1;
                ec[c] = 1;
                if (int_mul(int_mul(ea, eb), ec) == int_mul(ea, int_mul(eb, ec))) {
                    ++count;
                }
            }
        }
    }
    return count;
}

} // namespace bq::exact
