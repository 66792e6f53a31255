#pragma once

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace axial {

/// Permutation of {0..n-1} stored as the image list.
class Perm {
public:
    Perm() = default;
    explicit Perm(std::size_t n) : img_(n) { std::iota(img_.begin(), img_.end(), 0); }
    explicit Perm(std::vector<int> images) : img_(std::move(images)) {
        std::vector<bool> seen(img_.size(), false);
        for (int v : img_) {
            if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v])
                throw std::invalid_argument("Perm: images not a bijection");
            seen[v] = true;
        }
    }

    std::size_t degree() const { return img_.size(); }
    int operator[](int p) const { return img_[p]; }

    bool is_identity() const {
        for (std::size_t i = 0; i < img_.size(); ++i)
            if (img_[i] != static_cast<int>(i)) return false;
        return true;
    }

    // (a*b)[p] = b[a[p]]: apply a first, then b.
    Perm operator*(const Perm& b) const {
        assert(degree() == b.degree());
        std::vector<int> r(img_.size());
        for (std::size_t i = 0; i < img_.size(); ++i) r[i] = b.img_[img_[i]];
        return Perm(std::move(r));
    }

    Perm inverse() const {
        std::vector<int> r(img_.size());
        for (std::size_t i = 0; i < img_.size(); ++i) r[img_[i]] = static_cast<int>(i);
        return Perm(std::move(r));
    }

    int order() const {
        int n = 1;
        Perm p = *this;
        while (!p.is_identity()) {
            p = p * (*this);
            ++n;
        }
        return n;
    }

    bool operator==(const Perm& o) const { return img_ == o.img_; }
    bool operator<(const Perm& o) const { return img_ < o.img_; }

    const std::vector<int>& images() const { return img_; }

    /// Cycle notation, e.g. "(0 1)(2 3)"; identity prints as "()".
    std::string cycles() const {
        std::string s;
        std::vector<bool> seen(img_.size(), false);
        for (std::size_t i = 0; i < img_.size(); ++i) {
            if (seen[i] || img_[i] == static_cast<int>(i)) continue;
            s += "(";
            int p = static_cast<int>(i);
            bool first = true;
            do {
                if (!first) s += " ";
                s += std::to_string(p);
                seen[p] = true;
                p = img_[p];
                first = false;
            } while (p != static_cast<int>(i));
            s += ")";
        }
        return s.empty() ? "()" : s;
    }

    static Perm from_cycles(const std::string& s, std::size_t degree) {
        std::vector<int> img(degree);
        std::iota(img.begin(), img.end(), 0);
        std::size_t i = 0;
        while (i < s.size()) {
            while (i < s.size() && s[i] != '(') ++i;
            if (i >= s.size()) break;
            ++i;
            std::vector<int> cyc;
            std::string num;
            for (; i < s.size() && s[i] != ')'; ++i) {
                if (std::isdigit(static_cast<unsigned char>(s[i]))) {
                    num += s[i];
                } else if (!num.empty()) {
                    cyc.push_back(std::stoi(num));
                    num.clear();
                }
            }
            if (!num.empty()) cyc.push_back(std::stoi(num));
            ++i;
            for (std::size_t k = 0; k < cyc.size(); ++k) {
                int from = cyc[k], to = cyc[(k + 1) % cyc.size()];
                if (from < 0 || from >= static_cast<int>(degree))
                    throw std::invalid_argument("from_cycles: point out of range");
                img[from] = to;
            }
        }
        return Perm(std::move(img));
    }

private:
    std::vector<int> img_;
};

}  // namespace axial
