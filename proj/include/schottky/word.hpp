#pragma once

#include "schottky/matrix.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace schottky {

// A word over named ambient generators: sequence of (name, exponent) pairs.
struct Word {
    std::vector<std::pair<std::string, long>> letters;

    bool empty() const { return letters.empty(); }

    Word& append(const std::string& name, long exp) {
        if (exp != 0) {
            if (!letters.empty() && letters.back().first == name) {
                letters.back().second += exp;
                if (letters.back().second == 0) letters.pop_back();
            } else {
                letters.emplace_back(name, exp);
            }
        }
        return *this;
    }

    Word operator+(const Word& o) const {
        Word w = *this;
        for (const auto& [n, e] : o.letters) w.append(n, e);
        return w;
    }

    Word inverse() const {
        Word w;
        for (auto it = letters.rbegin(); it != letters.rend(); ++it) w.append(it->first, -it->second);
        return w;
    }

    std::string str() const {
        std::string s;
        for (const auto& [n, e] : letters) {
            if (!s.empty()) s += " ";
            s += n + "^" + std::to_string(e);
        }
        return s.empty() ? "1" : s;
    }
};

using GeneratorMap = std::map<std::string, Mat>;

// Named ambient generating set of SL_n(Z): the elementary matrices E_ij(+1)
// and the standard pair T = E_12(1), S = signed cyclic shift.
inline GeneratorMap ambient_generators(int n) {
    if (n < 2) throw std::invalid_argument("need n >= 2");
    GeneratorMap g;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            Mat e = mat_identity(n);
            e(i, j) = 1;
            g["E" + std::to_string(i + 1) + std::to_string(j + 1)] = e;
        }
    Mat t = mat_identity(n);
    t(0, 1) = 1;
    g["T"] = t;
    Mat s = Mat::Zero(n, n);
    for (int i = 1; i < n; ++i) s(i, i - 1) = 1;
    s(0, n - 1) = (n % 2 == 1) ? 1 : -1;  // det = 1
    g["S"] = s;
    return g;
}

struct GroupElement {
    Mat matrix;
    std::optional<Word> word;

    GroupElement() = default;
    explicit GroupElement(Mat m, std::optional<Word> w = std::nullopt) : matrix(std::move(m)), word(std::move(w)) {}

    int dim() const { return static_cast<int>(matrix.rows()); }

    GroupElement operator*(const GroupElement& o) const {
        GroupElement r(mat_mul(matrix, o.matrix));
        if (word && o.word) r.word = *word + *o.word;
        return r;
    }

    GroupElement inverse() const {
        GroupElement r(mat_inv(matrix));
        if (word) r.word = word->inverse();
        return r;
    }

    GroupElement pow(long k) const {
        GroupElement r(mat_pow(matrix, k));
        if (word) {
            Word w;
            if (word->letters.size() == 1) {
                w.append(word->letters[0].first, word->letters[0].second * k);
            } else {
                long reps = k < 0 ? -k : k;
                Word base = k < 0 ? word->inverse() : *word;
                for (long i = 0; i < reps; ++i) w = w + base;
            }
            r.word = w;
        }
        return r;
    }

    bool operator==(const GroupElement& o) const { return matrix == o.matrix; }
};

inline GroupElement evaluate_word(const Word& w, const GeneratorMap& gens, int n) {
    Mat acc = mat_identity(n);
    for (const auto& [name, exp] : w.letters) {
        auto it = gens.find(name);
        if (it == gens.end()) throw std::invalid_argument("unknown generator name: " + name);
        acc = acc * mat_pow(it->second, exp);
    }
    return GroupElement(std::move(acc), w);
}

inline bool is_special_linear(const Mat& m) {
    return m.rows() == m.cols() && is_integer_matrix(m) && mat_det(m) == 1;
}

}  // namespace schottky
