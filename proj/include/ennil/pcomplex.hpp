#ifndef ENNIL_PCOMPLEX_HPP
#define ENNIL_PCOMPLEX_HPP

#include "cyclo.hpp"
#include "linalg.hpp"
#include "report.hpp"

#include <map>
#include <tuple>
#include <vector>

#include "../../vendor/json.hpp"

namespace ennil {

// Placement of a graded piece: q-degree, lambda-degree, Z/2 parity.
using Piece = std::tuple<long, long, int>;

inline Piece piece_above(const Piece &k) {
    return {std::get<0>(k) + 2, std::get<1>(k), std::get<2>(k)};
}

// Finite graded p-complex: module over k[d]/(d^p), d raising q by 2 and
// preserving lambda and parity. diff[k] maps the piece at k to the piece
// at q+2 (matrix convention: dim(target) x dim(source), column vectors).
template <class C> struct PComplex {
    long p = 0;
    std::map<Piece, int> pieces;
    std::map<Piece, Matrix<C>> diff;

    explicit PComplex(long p_) : p(p_) {}

    int dim(const Piece &k) const {
        auto it = pieces.find(k);
        return it == pieces.end() ? 0 : it->second;
    }

    const Matrix<C> *map_at(const Piece &k) const {
        auto it = diff.find(k);
        return it == diff.end() ? nullptr : &it->second;
    }

    void check() const {
        for (auto &[k, M] : diff) {
            if (M.cols != dim(k) || M.rows != dim(piece_above(k)))
                throw std::invalid_argument("PComplex: matrix shape");
        }
    }
};

// d^j out of the piece at k (identity for j = 0).
template <class C>
Matrix<C> power_map(const PComplex<C> &c, Piece k, int j) {
    int d0 = c.dim(k);
    Matrix<C> M(d0, d0);
    for (int i = 0; i < d0; ++i) M.at(i, i) = C(1);
    for (int t = 0; t < j; ++t) {
        const Matrix<C> *step = c.map_at(k);
        if (!step) {
            M = Matrix<C>(c.dim(piece_above(k)), d0); // zero map
        } else {
            M = mat_mul(*step, M);
        }
        k = piece_above(k);
    }
    return M;
}

template <class C> bool verify_p_nilpotent(const PComplex<C> &c) {
    c.check();
    for (auto &[k, dimk] : c.pieces) {
        auto M = power_map(c, k, static_cast<int>(c.p));
        for (auto &v : M.a)
            if (!is_zero(v)) return false;
    }
    return true;
}

// Jordan block: size, q-degree of the generator, lambda, parity.
struct Block {
    int size;
    long q0;
    long lam;
    int parity;
    bool operator<(const Block &o) const {
        return std::tie(size, q0, lam, parity) <
               std::tie(o.size, o.q0, o.lam, o.parity);
    }
    bool operator==(const Block &o) const {
        return size == o.size && q0 == o.q0 && lam == o.lam &&
               parity == o.parity;
    }
};

// Graded Jordan decomposition by rank analysis: with r_j(k) = rank d^j on
// the piece at k, the number of blocks generated at k surviving j steps is
// N_j(k) = r_j(k) - r_{j+1}(k down 2), and exactly-size-s counts are
// N_{s-1}(k) - N_s(k).
template <class C> std::vector<Block> jordan_blocks(const PComplex<C> &c) {
    c.check();
    std::map<Piece, std::vector<int>> r; // r[k][j], j = 0..p
    for (auto &[k, dimk] : c.pieces) {
        std::vector<int> rj;
        for (int j = 0; j <= c.p; ++j)
            rj.push_back(j == 0 ? dimk : rank(power_map(c, k, j)));
        r.emplace(k, std::move(rj));
    }
    auto rj_at = [&](const Piece &k, int j) -> int {
        auto it = r.find(k);
        if (it == r.end()) return 0;
        if (j >= static_cast<int>(it->second.size())) return 0;
        return it->second[j];
    };
    std::vector<Block> blocks;
    for (auto &[k, rj] : r) {
        Piece below{std::get<0>(k) - 2, std::get<1>(k), std::get<2>(k)};
        for (int s = 1; s <= c.p; ++s) {
            auto N = [&](int j) {
                return rj_at(k, j) - rj_at(below, j + 1);
            };
            int count = N(s - 1) - N(s);
            for (int t = 0; t < count; ++t)
                blocks.push_back(
                    {s, std::get<0>(k), std::get<1>(k), std::get<2>(k)});
        }
    }
    std::sort(blocks.begin(), blocks.end());
    return blocks;
}

// K0 symbol: sum over blocks of (-1)^parity q^{q0} l^{lam} (1+q^2+...+q^{2(s-1)});
// size-p blocks reduce to 0 in O_p.
inline QLambda blocks_symbol(long p, const std::vector<Block> &blocks) {
    QLambda out(p);
    for (auto &b : blocks) {
        std::map<long, Rat> powers;
        for (int s = 0; s < b.size; ++s) powers[b.q0 + 2 * s] += 1;
        Cyclo c = cyclo_reduce(p, powers);
        if (b.parity & 1) c = -c;
        out.add(b.lam, c);
    }
    return out;
}

template <class C> QLambda k0_symbol(const PComplex<C> &c) {
    return blocks_symbol(c.p, jordan_blocks(c));
}

// Truncated weighted-shift complex: basis v_0..v_{count-1}, v_r placed at
// q0 + 2r, d(v_r) = (w + r) v_{r+1} over F_p.
inline PComplex<Fp> weighted_shift_complex(long p, long w, int count, long q0,
                                           long lam, int parity) {
    PComplex<Fp> c(p);
    for (int r = 0; r < count; ++r)
        c.pieces[{q0 + 2 * r, lam, parity}] = 1;
    for (int r = 0; r + 1 < count; ++r) {
        Matrix<Fp> M(1, 1);
        M.at(0, 0) = Fp(w + r, p);
        c.diff[{q0 + 2 * r, lam, parity}] = M;
    }
    return c;
}

// Leading block of the weighted shift and contractibility of the tail.
// Truncation-consistency: extending by a multiple of p changes nothing.
inline Report weighted_shift_blocks(long p, long w, int count, long q0,
                                    long lam, int parity) {
    Report rep;
    rep.command = "weighted_shift_blocks";
    long r0 = ((-w) % p + p) % p;
    int lead = static_cast<int>(r0) + 1;
    auto c = weighted_shift_complex(p, w, count, q0, lam, parity);
    rep.add("p_nilpotent", verify_p_nilpotent(c), "d^p", "0");
    auto blocks = jordan_blocks(c);
    // expected: leading block of size lead at q0, then size-p blocks, with a
    // possibly shorter last block due to truncation
    std::vector<Block> expect;
    int at = 0;
    while (at < count) {
        int s = (at == 0) ? std::min(lead, count) : std::min<int>(p, count - at);
        expect.push_back({s, q0 + 2 * at, lam, parity});
        at += s;
    }
    std::sort(expect.begin(), expect.end());
    rep.add("block_structure", blocks == expect,
            std::to_string(blocks.size()) + " blocks",
            std::to_string(expect.size()) + " blocks",
            "leading size " + std::to_string(std::min(lead, count)));
    // all full tail blocks contractible: only the leading block contributes
    bool full = (count - lead) >= 0 && (count - lead) % p == 0;
    if (full) {
        QLambda sym = k0_symbol(c);
        std::vector<Block> leadonly{{std::min(lead, count), q0, lam, parity}};
        QLambda leadsym = blocks_symbol(p, leadonly);
        rep.add("tail_contractible", sym == leadsym, qlambda_str(sym),
                qlambda_str(leadsym));
        // truncation-consistency
        auto c2 = weighted_shift_complex(p, w, count + static_cast<int>(p), q0,
                                         lam, parity);
        rep.add("truncation_consistent", k0_symbol(c2) == sym,
                qlambda_str(k0_symbol(c2)), qlambda_str(sym));
    }
    return rep;
}

// JSON schema: {"p":P,"field":"Fp"|"Q","pieces":[{"q","lambda","parity","dim"}],
// "maps":[{"from":{"q","lambda","parity"},"matrix":[[row]...]}]}. A matrix is
// dim(target) x dim(source) and acts on column vectors; the target is the
// piece at q+2 with the same lambda and parity.
template <class C>
PComplex<C> pcomplex_from_json(const nlohmann::json &j) {
    long p = j.at("p").get<long>();
    PComplex<C> c(p);
    for (auto &pc : j.at("pieces")) {
        Piece k{pc.at("q").get<long>(), pc.at("lambda").get<long>(),
                pc.at("parity").get<int>()};
        c.pieces[k] = pc.at("dim").get<int>();
    }
    if (j.contains("maps"))
        for (auto &mp : j.at("maps")) {
            auto &fr = mp.at("from");
            Piece k{fr.at("q").get<long>(), fr.at("lambda").get<long>(),
                    fr.at("parity").get<int>()};
            auto &rows = mp.at("matrix");
            Matrix<C> M(c.dim(piece_above(k)), c.dim(k));
            if (static_cast<int>(rows.size()) != M.rows)
                throw std::invalid_argument("pcomplex json: matrix rows");
            for (int i = 0; i < M.rows; ++i) {
                if (static_cast<int>(rows[i].size()) != M.cols)
                    throw std::invalid_argument("pcomplex json: matrix cols");
                for (int jc = 0; jc < M.cols; ++jc) {
                    long v = rows[i][jc].get<long>();
                    if constexpr (std::is_same_v<C, Fp>) M.at(i, jc) = Fp(v, p);
                    else M.at(i, jc) = C(v);
                }
            }
            c.diff[k] = std::move(M);
        }
    c.check();
    return c;
}

template <class C> Report pcomplex_report(const PComplex<C> &c) {
    Report rep;
    rep.command = "pcomplex";
    bool nil = verify_p_nilpotent(c);
    rep.add("p_nilpotent", nil, "d^p", "0");
    if (!nil) return rep;
    auto blocks = jordan_blocks(c);
    int total = 0;
    for (auto &b : blocks) total += b.size;
    int dimsum = 0;
    for (auto &[k, d] : c.pieces) dimsum += d;
    rep.add("blocks_exhaust_dimension", total == dimsum, std::to_string(total),
            std::to_string(dimsum));
    for (auto &b : blocks)
        rep.add("block", true,
                "size " + std::to_string(b.size) + " at q=" +
                    std::to_string(b.q0) + ", lambda=" + std::to_string(b.lam) +
                    ", parity=" + std::to_string(b.parity),
                "", "");
    rep.add("k0_symbol", true, qlambda_str(k0_symbol(c)), "", "");
    return rep;
}

} // namespace ennil

#endif
