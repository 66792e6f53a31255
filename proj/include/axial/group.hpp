#pragma once

#include "axial/perm.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace axial {

/// A subgroup given by its sorted element indices within a parent group.
struct Subgroup {
    std::vector<int> elems;  // sorted

    std::size_t order() const { return elems.size(); }
    bool contains(int e) const {
        return std::binary_search(elems.begin(), elems.end(), e);
    }
    bool operator==(const Subgroup& o) const { return elems == o.elems; }
    bool operator<(const Subgroup& o) const { return elems < o.elems; }
};

/// Small permutation group with three marked involution-or-identity
/// generators, stored as an explicit element list with a multiplication
/// table. All queries run by exhaustive enumeration.
class MarkedGroup {
public:
    std::string name;
    std::size_t degree = 0;
    int gen[3] = {0, 0, 0};                  // element indices of x,y,z
    std::vector<std::string> axes_patterns;  // expected orbit-size signatures

    MarkedGroup(std::string nm, std::size_t deg, const Perm& x, const Perm& y, const Perm& z,
                std::vector<std::string> patterns = {})
        : name(std::move(nm)), degree(deg), axes_patterns(std::move(patterns)) {
        // Close under products.
        std::map<Perm, int> index;
        auto add = [&](const Perm& p) -> int {
            auto it = index.find(p);
            if (it != index.end()) return it->second;
            int id = static_cast<int>(elems_.size());
            elems_.push_back(p);
            index.emplace(p, id);
            return id;
        };
        add(Perm(deg));
        int gx = add(x), gy = add(y), gz = add(z);
        for (std::size_t i = 0; i < elems_.size(); ++i) {
            for (int g : {gx, gy, gz}) {
                add(elems_[i] * elems_[g]);
                if (elems_.size() > 100000) throw std::runtime_error("group too large");
            }
        }
        // Canonical element order for determinism.
        std::vector<Perm> sorted(elems_.begin(), elems_.end());
        std::sort(sorted.begin(), sorted.end());
        elems_ = std::move(sorted);
        index.clear();
        for (std::size_t i = 0; i < elems_.size(); ++i) index.emplace(elems_[i], static_cast<int>(i));
        gen[0] = index.at(x);
        gen[1] = index.at(y);
        gen[2] = index.at(z);

        const int n = static_cast<int>(elems_.size());
        mul_.assign(n, std::vector<int>(n));
        inv_.assign(n, 0);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) mul_[a][b] = index.at(elems_[a] * elems_[b]);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (mul_[a][b] == id()) inv_[a] = b;
        ord_.assign(n, 0);
        for (int a = 0; a < n; ++a) {
            int o = 1, e = a;
            while (e != id()) {
                e = mul_[e][a];
                ++o;
            }
            ord_[a] = o;
        }
        for (int g : gen)
            if (ord_[g] > 2) throw std::invalid_argument("marked generators must be involutions or identity");

        // D = union of the conjugacy classes of the three generators (identity excluded).
        std::set<int> d;
        for (int g : gen)
            if (g != id())
                for (int e : conj_class(g)) d.insert(e);
        D_.assign(d.begin(), d.end());
    }

    int id() const {
        for (std::size_t i = 0; i < elems_.size(); ++i)
            if (elems_[i].is_identity()) return static_cast<int>(i);
        throw std::logic_error("no identity");
    }

    std::size_t order() const { return elems_.size(); }
    const std::vector<Perm>& elements() const { return elems_; }
    const Perm& perm(int e) const { return elems_[e]; }
    int mul(int a, int b) const { return mul_[a][b]; }
    int inv(int a) const { return inv_[a]; }
    int conj(int a, int g) const { return mul_[mul_[inv_[g]][a]][g]; }  // g^-1 a g
    int elem_order(int a) const { return ord_[a]; }
    const std::vector<int>& dclass() const { return D_; }

    int index_of(const Perm& p) const {
        auto it = std::lower_bound(elems_.begin(), elems_.end(), p);
        if (it == elems_.end() || !(*it == p)) throw std::invalid_argument("element not in group");
        return static_cast<int>(it - elems_.begin());
    }

    std::vector<int> conj_class(int e) const {
        std::set<int> cls;
        for (int g = 0; g < static_cast<int>(order()); ++g) cls.insert(conj(e, g));
        return {cls.begin(), cls.end()};
    }

    std::set<int> orbit(int point) const {
        std::set<int> orb{point};
        std::vector<int> work{point};
        while (!work.empty()) {
            int p = work.back();
            work.pop_back();
            for (int g : gen) {
                int q = elems_[g][p];
                if (orb.insert(q).second) work.push_back(q);
            }
        }
        return orb;
    }

    Subgroup stabilizer(int point) const {
        Subgroup h;
        for (int g = 0; g < static_cast<int>(order()); ++g)
            if (elems_[g][point] == point) h.elems.push_back(g);
        return h;
    }

    Subgroup centralizer(int e) const {
        Subgroup h;
        for (int g = 0; g < static_cast<int>(order()); ++g)
            if (mul_[g][e] == mul_[e][g]) h.elems.push_back(g);
        return h;
    }

    Subgroup full_group() const {
        Subgroup h;
        h.elems.resize(order());
        for (std::size_t i = 0; i < order(); ++i) h.elems[i] = static_cast<int>(i);
        return h;
    }

    Subgroup close(std::vector<int> seed) const {
        std::set<int> s(seed.begin(), seed.end());
        s.insert(id());
        std::vector<int> work(s.begin(), s.end());
        while (!work.empty()) {
            int a = work.back();
            work.pop_back();
            std::vector<int> cur(s.begin(), s.end());
            for (int b : cur) {
                for (int c : {mul_[a][b], mul_[b][a], inv_[a]})
                    if (s.insert(c).second) work.push_back(c);
            }
        }
        return Subgroup{{s.begin(), s.end()}};
    }

    bool is_subgroup(const Subgroup& h) const {
        for (int a : h.elems)
            for (int b : h.elems)
                if (!h.contains(mul_[a][b])) return false;
        return !h.elems.empty() && h.contains(id());
    }

    /// All subgroups H with lower <= H <= upper, by closing lower plus
    /// elements of upper one at a time.
    std::vector<Subgroup> subgroup_interval(const Subgroup& lower, const Subgroup& upper) const {
        for (int e : lower.elems)
            if (!upper.contains(e)) throw std::invalid_argument("subgroup_interval: lower not in upper");
        std::set<Subgroup> all;
        std::vector<Subgroup> work;
        Subgroup base = close(lower.elems);
        all.insert(base);
        work.push_back(base);
        while (!work.empty()) {
            Subgroup h = work.back();
            work.pop_back();
            for (int e : upper.elems) {
                if (h.contains(e)) continue;
                std::vector<int> seed = h.elems;
                seed.push_back(e);
                Subgroup bigger = close(seed);
                bool inside = true;
                for (int a : bigger.elems)
                    if (!upper.contains(a)) {
                        inside = false;
                        break;
                    }
                if (inside && all.insert(bigger).second) work.push_back(bigger);
            }
        }
        return {all.begin(), all.end()};
    }

    /// Action of G on the right cosets of h; point 0 is the coset h itself.
    /// Returns (number of points, per-element point permutation).
    std::pair<int, std::vector<std::vector<int>>> coset_action(const Subgroup& h) const {
        if (!is_subgroup(h)) throw std::invalid_argument("coset_action: not a subgroup");
        const int n = static_cast<int>(order());
        std::vector<int> coset_of(n, -1);  // element -> coset index
        std::vector<int> reps;
        for (int g = 0; g < n; ++g) {
            if (coset_of[g] != -1) continue;
            // Make the identity's coset (= h) point 0 by starting scan at 0.
            int c = static_cast<int>(reps.size());
            reps.push_back(g);
            for (int a : h.elems) coset_of[mul_[a][g]] = c;
        }
        int npts = static_cast<int>(reps.size());
        std::vector<std::vector<int>> act(n, std::vector<int>(npts));
        for (int g = 0; g < n; ++g)
            for (int c = 0; c < npts; ++c) act[g][c] = coset_of[mul_[reps[c]][g]];
        return {npts, act};
    }

    bool is_six_transposition() const {
        for (int a : D_)
            for (int b : D_)
                if (ord_[mul_[a][b]] > 6) return false;
        return true;
    }

    /// All automorphisms, as permutations of element indices. Cached.
    const std::vector<std::vector<int>>& automorphisms() const {
        if (!auts_.empty()) return auts_;
        // Greedy small generating sequence.
        std::vector<int> gens;
        Subgroup span = close({});
        for (int e = 0; e < static_cast<int>(order()) && span.order() < order(); ++e) {
            if (span.contains(e)) continue;
            std::vector<int> seed = gens;
            seed.push_back(e);
            Subgroup bigger = close(seed);
            if (bigger.order() > span.order()) {
                gens.push_back(e);
                span = bigger;
            }
        }
        std::vector<std::vector<int>> cand_per_gen;
        for (int g : gens) {
            std::vector<int> cands;
            for (int e = 0; e < static_cast<int>(order()); ++e)
                if (ord_[e] == ord_[g]) cands.push_back(e);
            cand_per_gen.push_back(std::move(cands));
        }
        std::vector<int> images(gens.size());
        std::vector<std::vector<int>> result;
        extend_aut(gens, cand_per_gen, 0, images, result);
        auts_ = std::move(result);
        return auts_;
    }

private:
    void extend_aut(const std::vector<int>& gens, const std::vector<std::vector<int>>& cands,
                    std::size_t k, std::vector<int>& images,
                    std::vector<std::vector<int>>& out) const {
        if (k == gens.size()) {
            std::vector<int> phi = build_hom(gens, images);
            if (!phi.empty()) out.push_back(std::move(phi));
            return;
        }
        for (int img : cands[k]) {
            images[k] = img;
            extend_aut(gens, cands, k + 1, images, out);
        }
    }

    // Extends gens -> images to a full automorphism; empty when inconsistent
    // or not bijective.
    std::vector<int> build_hom(const std::vector<int>& gens, const std::vector<int>& images) const {
        const int n = static_cast<int>(order());
        std::vector<int> phi(n, -1);
        phi[id()] = id();
        std::vector<int> work{id()};
        while (!work.empty()) {
            int a = work.back();
            work.pop_back();
            for (std::size_t k = 0; k < gens.size(); ++k) {
                int b = mul_[a][gens[k]];
                int fb = mul_[phi[a]][images[k]];
                if (phi[b] == -1) {
                    phi[b] = fb;
                    work.push_back(b);
                } else if (phi[b] != fb) {
                    return {};
                }
            }
        }
        std::vector<bool> hit(n, false);
        for (int v : phi) {
            if (v == -1) return {};
            if (hit[v]) return {};
            hit[v] = true;
        }
        for (int a = 0; a < n; ++a)
            for (std::size_t k = 0; k < gens.size(); ++k)
                if (phi[mul_[a][gens[k]]] != mul_[phi[a]][images[k]]) return {};
        return phi;
    }

    std::vector<Perm> elems_;
    std::vector<std::vector<int>> mul_;
    std::vector<int> inv_;
    std::vector<int> ord_;
    std::vector<int> D_;
    mutable std::vector<std::vector<int>> auts_;
};

}  // namespace axial
