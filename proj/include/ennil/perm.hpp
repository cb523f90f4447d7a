#ifndef ENNIL_PERM_HPP
#define ENNIL_PERM_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace ennil {

// Permutation of {1..n} in one-line notation (stored 0-based).
struct Perm {
    std::vector<int> img;

    Perm() = default;
    explicit Perm(std::vector<int> one_line) : img(std::move(one_line)) {}

    static Perm identity(int n) {
        std::vector<int> v(n);
        for (int i = 0; i < n; ++i) v[i] = i;
        return Perm(v);
    }

    // Simple transposition s_j, 1 <= j <= n-1.
    static Perm transposition(int n, int j) {
        if (j < 1 || j >= n) throw std::out_of_range("transposition index");
        Perm w = identity(n);
        std::swap(w.img[j - 1], w.img[j]);
        return w;
    }

    static Perm longest(int n) {
        std::vector<int> v(n);
        for (int i = 0; i < n; ++i) v[i] = n - 1 - i;
        return Perm(v);
    }

    int n() const { return static_cast<int>(img.size()); }

    bool is_identity() const {
        for (int i = 0; i < n(); ++i)
            if (img[i] != i) return false;
        return true;
    }

    int length() const {
        int inv = 0;
        for (int i = 0; i < n(); ++i)
            for (int j = i + 1; j < n(); ++j)
                if (img[i] > img[j]) ++inv;
        return inv;
    }

    int operator()(int i) const { return img[i - 1] + 1; } // 1-based

    Perm operator*(const Perm &o) const { // (w*v)(i) = w(v(i))
        if (n() != o.n()) throw std::invalid_argument("Perm: rank mismatch");
        std::vector<int> v(img.size());
        for (int i = 0; i < n(); ++i) v[i] = img[o.img[i]];
        return Perm(v);
    }

    Perm inverse() const {
        std::vector<int> v(img.size());
        for (int i = 0; i < n(); ++i) v[img[i]] = i;
        return Perm(v);
    }

    bool operator==(const Perm &o) const { return img == o.img; }
    bool operator!=(const Perm &o) const { return img != o.img; }
    bool operator<(const Perm &o) const { return img < o.img; }

    // Lexicographically smallest reduced word, letters 1-based.
    // Greedy: repeatedly take the smallest left descent.
    std::vector<int> reduced_word() const {
        std::vector<int> word;
        Perm w = *this;
        Perm winv = w.inverse();
        while (!w.is_identity()) {
            int pick = -1;
            for (int i = 0; i + 1 < n(); ++i) {
                if (winv.img[i] > winv.img[i + 1]) { pick = i; break; }
            }
            if (pick < 0) throw std::logic_error("reduced_word: no descent");
            word.push_back(pick + 1);
            std::swap(winv.img[pick], winv.img[pick + 1]);
            w = winv.inverse();
        }
        return word;
    }

    std::string str() const {
        std::string s = "[";
        for (int i = 0; i < n(); ++i) {
            if (i) s += " ";
            s += std::to_string(img[i] + 1);
        }
        return s + "]";
    }
};

inline Perm perm_from_word(int n, const std::vector<int> &word) {
    Perm w = Perm::identity(n);
    for (int j : word) w = w * Perm::transposition(n, j);
    return w;
}

} // namespace ennil

#endif
