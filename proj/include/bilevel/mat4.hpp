// Exact 4x4 matrices over the rationals: just enough linear algebra for the
// symplectic group machinery (products, inverses, transpose, charpoly).
#pragma once

#include "bilevel/rational.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace bilevel {

struct Mat4 {
    std::array<Rat, 16> a{};  // row-major

    Rat& at(int i, int j) { return a[static_cast<size_t>(4 * i + j)]; }
    const Rat& at(int i, int j) const { return a[static_cast<size_t>(4 * i + j)]; }

    static Mat4 identity() {
        Mat4 m;
        for (int i = 0; i < 4; ++i) m.at(i, i) = 1;
        return m;
    }
    static Mat4 diag(const Rat& d0, const Rat& d1, const Rat& d2, const Rat& d3) {
        Mat4 m;
        m.at(0, 0) = d0; m.at(1, 1) = d1; m.at(2, 2) = d2; m.at(3, 3) = d3;
        return m;
    }
    static Mat4 from_rows(std::array<std::array<long, 4>, 4> rows) {
        Mat4 m;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) m.at(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
        return m;
    }

    Mat4 transpose() const {
        Mat4 r;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) r.at(i, j) = at(j, i);
        return r;
    }

    friend Mat4 operator*(const Mat4& x, const Mat4& y) {
        Mat4 r;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                Rat s = 0;
                for (int k = 0; k < 4; ++k) s += x.at(i, k) * y.at(k, j);
                r.at(i, j) = s;
            }
        return r;
    }
    friend Mat4 operator-(const Mat4& x, const Mat4& y) {
        Mat4 r;
        for (size_t i = 0; i < 16; ++i) r.a[i] = x.a[i] - y.a[i];
        return r;
    }
    friend bool operator==(const Mat4& x, const Mat4& y) { return x.a == y.a; }

    bool integral() const {
        for (const auto& v : a)
            if (!is_integer(v)) return false;
        return true;
    }

    // Exact Gauss-Jordan inverse; throws on singular input.
    Mat4 inverse() const {
        std::array<std::array<Rat, 8>, 4> m;
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 4; ++j) m[static_cast<size_t>(i)][static_cast<size_t>(j)] = at(i, j);
            for (int j = 4; j < 8; ++j) m[static_cast<size_t>(i)][static_cast<size_t>(j)] = (j - 4 == i) ? 1 : 0;
        }
        for (int c = 0; c < 4; ++c) {
            int p = c;
            while (p < 4 && m[static_cast<size_t>(p)][static_cast<size_t>(c)] == 0) ++p;
            if (p == 4) throw std::invalid_argument("Mat4::inverse: singular matrix");
            std::swap(m[static_cast<size_t>(c)], m[static_cast<size_t>(p)]);
            Rat piv = m[static_cast<size_t>(c)][static_cast<size_t>(c)];
            for (int j = 0; j < 8; ++j) m[static_cast<size_t>(c)][static_cast<size_t>(j)] /= piv;
            for (int r = 0; r < 4; ++r) {
                if (r == c) continue;
                Rat f = m[static_cast<size_t>(r)][static_cast<size_t>(c)];
                if (f == 0) continue;
                for (int j = 0; j < 8; ++j)
                    m[static_cast<size_t>(r)][static_cast<size_t>(j)] -= f * m[static_cast<size_t>(c)][static_cast<size_t>(j)];
            }
        }
        Mat4 r;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) r.at(i, j) = m[static_cast<size_t>(i)][static_cast<size_t>(j + 4)];
        return r;
    }

    std::string str() const {
        std::string s;
        for (int i = 0; i < 4; ++i) {
            s += i == 0 ? "[" : " ";
            for (int j = 0; j < 4; ++j) {
                s += rat_str(at(i, j));
                if (j < 3) s += " ";
            }
            s += i == 3 ? "]" : "\n";
        }
        return s;
    }
};

// The standard antisymmetric form J = (0 I; -I 0) on 2+2 blocks.
inline const Mat4& symplectic_form() {
    static const Mat4 J = [] {
        Mat4 j;
        j.at(0, 2) = 1; j.at(1, 3) = 1;
        j.at(2, 0) = -1; j.at(3, 1) = -1;
        return j;
    }();
    return J;
}

inline bool is_symplectic(const Mat4& m) {
    return m.transpose() * symplectic_form() * m == symplectic_form();
}

}  // namespace bilevel
