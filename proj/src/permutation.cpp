#include "shufsq/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace shufsq {

Permutation::Permutation(std::vector<int> mapping) : mapping_(std::move(mapping)) {
    int n = degree();
    std::vector<bool> seen(n, false);
    for (int v : mapping_) {
        if (v < 0 || v >= n || seen[v])
            throw std::invalid_argument("mapping is not a bijection on {0..n-1}");
        seen[v] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> m(n);
    std::iota(m.begin(), m.end(), 0);
    return Permutation(std::move(m));
}

Permutation Permutation::rotation(int n, int shift) {
    if (n == 0) return Permutation();
    shift = ((shift % n) + n) % n;
    std::vector<int> m(n);
    for (int i = 0; i < n; ++i) m[i] = (i + shift) % n;
    return Permutation(std::move(m));
}

Permutation Permutation::reflection(int n, int c) {
    if (n == 0) return Permutation();
    c = ((c % n) + n) % n;
    std::vector<int> m(n);
    for (int i = 0; i < n; ++i) m[i] = ((c - i) % n + n) % n;
    return Permutation(std::move(m));
}

Permutation Permutation::parse(std::string_view text) {
    std::vector<int> values;
    if (text.find(',') != std::string_view::npos) {
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t next = text.find(',', pos);
            std::string_view item = text.substr(
                pos, next == std::string_view::npos ? text.size() - pos : next - pos);
            if (item.empty()) throw std::invalid_argument("empty permutation entry");
            int v = 0;
            for (char ch : item) {
                if (ch < '0' || ch > '9')
                    throw std::invalid_argument("bad permutation entry");
                v = v * 10 + (ch - '0');
            }
            values.push_back(v);
            if (next == std::string_view::npos) break;
            pos = next + 1;
        }
    } else {
        for (char ch : text) {
            if (ch < '1' || ch > '9')
                throw std::invalid_argument("bad permutation digit");
            values.push_back(ch - '0');
        }
    }
    for (int& v : values) {
        if (v < 1) throw std::invalid_argument("permutation values are 1-based");
        --v;
    }
    return Permutation(std::move(values));
}

Permutation Permutation::inverse() const {
    std::vector<int> m(degree());
    for (int i = 0; i < degree(); ++i) m[mapping_[i]] = i;
    return Permutation(std::move(m));
}

bool Permutation::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if (mapping_[i] != i) return false;
    return true;
}

bool Permutation::is_involution() const { return *this == inverse(); }

bool Permutation::is_rotation() const {
    int n = degree();
    if (n == 0) return true;
    int t = mapping_[0];
    for (int i = 0; i < n; ++i)
        if (mapping_[i] != (i + t) % n) return false;
    return true;
}

Word Permutation::apply(const Word& w) const {
    if (w.length() != degree())
        throw std::invalid_argument("permutation degree does not match word length");
    std::vector<int> out(w.length());
    for (int i = 0; i < w.length(); ++i) out[i] = w.letter(mapping_[i]);
    Word result(std::span<const int>(out), w.alphabet_size());
    return word_with_style(result, w.renders_as_letters());
}

std::string Permutation::to_string() const {
    std::string out;
    bool commas = degree() >= 10;
    for (int i = 0; i < degree(); ++i) {
        if (commas && i > 0) out.push_back(',');
        out += std::to_string(mapping_[i] + 1);
    }
    return out;
}

std::vector<Permutation> group_members(GroupKind kind, int n) {
    if (n < 1) throw std::invalid_argument("group degree must be positive");
    std::vector<Permutation> out;
    switch (kind) {
        case GroupKind::cyclic:
            for (int t = 0; t < n; ++t) out.push_back(Permutation::rotation(n, t));
            break;
        case GroupKind::dihedral:
            for (int t = 0; t < n; ++t) out.push_back(Permutation::rotation(n, t));
            for (int c = 0; c < n; ++c) out.push_back(Permutation::reflection(n, c));
            break;
        case GroupKind::symmetric: {
            std::vector<int> m(n);
            std::iota(m.begin(), m.end(), 0);
            do {
                out.push_back(Permutation(m));
            } while (std::next_permutation(m.begin(), m.end()));
            break;
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace shufsq
