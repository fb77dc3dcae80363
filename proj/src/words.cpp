#include "cospec/words.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace cospec {

std::string GroupFamilySpec::tag() const {
    std::ostringstream os;
    switch (family) {
        case Family::Free: os << "free(" << rank << ")"; break;
        case Family::FreeAbelian: os << "free-abelian(" << rank << ")"; break;
        case Family::RegularTree: os << "regular-tree(" << rank << ")"; break;
    }
    return os.str();
}

GroupFamilySpec GroupFamilySpec::parse_tag(const std::string& tag) {
    auto l = tag.find('(');
    auto r = tag.find(')');
    if (l == std::string::npos || r == std::string::npos || r < l)
        throw config_error("bad family tag: " + tag);
    std::string name = tag.substr(0, l);
    int n = std::atoi(tag.substr(l + 1, r - l - 1).c_str());
    if (n <= 0) throw config_error("bad family rank in tag: " + tag);
    if (name == "free") return free_group(n);
    if (name == "free-abelian" || name == "abelian") return free_abelian(n);
    if (name == "regular-tree" || name == "tree") return regular_tree(n);
    throw config_error("unknown family: " + name);
}

Word Words::identity() const {
    if (spec.family == Family::FreeAbelian) return Word(spec.rank, 0);
    return {};
}

bool Words::is_identity(const Word& w) const {
    if (spec.family == Family::FreeAbelian)
        return std::all_of(w.begin(), w.end(), [](int32_t e) { return e == 0; });
    return w.empty();
}

int Words::length(const Word& w) const {
    if (spec.family == Family::FreeAbelian) {
        long s = 0;
        for (int32_t e : w) s += std::abs(e);
        return static_cast<int>(s);
    }
    return static_cast<int>(w.size());
}

Word Words::apply(const Word& w, int move) const {
    Word out = w;
    if (spec.family == Family::FreeAbelian) {
        out[spec.move_generator(move)] += spec.move_sign(move);
        return out;
    }
    if (!out.empty() && out.back() == static_cast<int32_t>(spec.inverse_move(move)))
        out.pop_back();
    else
        out.push_back(move);
    return out;
}

Word Words::concat(const Word& u, const Word& v) const {
    if (spec.family == Family::FreeAbelian) {
        Word out = u;
        for (int i = 0; i < spec.rank; ++i) out[i] += v[i];
        return out;
    }
    Word out = u;
    for (int32_t m : v) {
        if (!out.empty() && out.back() == static_cast<int32_t>(spec.inverse_move(m)))
            out.pop_back();
        else
            out.push_back(m);
    }
    return out;
}

Word Words::inverse(const Word& w) const {
    if (spec.family == Family::FreeAbelian) {
        Word out = w;
        for (auto& e : out) e = -e;
        return out;
    }
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(spec.inverse_move(*it));
    return out;
}

Word Words::power(const Word& w, int n) const {
    Word base = n >= 0 ? w : inverse(w);
    Word out = identity();
    for (int i = 0; i < std::abs(n); ++i) out = concat(out, base);
    return out;
}

bool Words::shortlex_less(const Word& a, const Word& b) const {
    if (spec.family == Family::FreeAbelian) {
        int la = length(a), lb = length(b);
        if (la != lb) return la < lb;
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Word Words::cyclic_reduce(const Word& w) const {
    if (spec.family == Family::FreeAbelian) return w;
    Word out = w;
    while (out.size() >= 2 && out.front() == static_cast<int32_t>(spec.inverse_move(out.back()))) {
        out.erase(out.begin());
        out.pop_back();
    }
    return out;
}

std::string Words::to_string(const Word& w) const {
    if (spec.family == Family::FreeAbelian) {
        std::ostringstream os;
        for (size_t i = 0; i < w.size(); ++i) {
            if (i) os << ',';
            os << w[i];
        }
        return os.str();
    }
    if (w.empty()) return "e";
    std::string s;
    for (int32_t m : w) {
        int g = spec.move_generator(m);
        s += static_cast<char>((spec.move_sign(m) > 0 ? 'a' : 'A') + g);
    }
    return s;
}

Word Words::parse(const std::string& text) const {
    if (spec.family == Family::FreeAbelian) {
        Word out(spec.rank, 0);
        std::stringstream ss(text);
        std::string item;
        int i = 0;
        while (std::getline(ss, item, ',')) {
            if (i >= spec.rank) throw config_error("too many exponents in word: " + text);
            out[i++] = std::atoi(item.c_str());
        }
        if (i != spec.rank) throw config_error("expected " + std::to_string(spec.rank) + " exponents: " + text);
        return out;
    }
    Word out;
    if (text == "e" || text.empty()) return out;
    for (char c : text) {
        int g, sign;
        if (c >= 'a' && c <= 'z') { g = c - 'a'; sign = +1; }
        else if (c >= 'A' && c <= 'Z') { g = c - 'A'; sign = -1; }
        else throw config_error(std::string("bad letter in word: ") + c);
        if (g >= spec.rank) throw config_error(std::string("letter out of range: ") + c);
        if (spec.involutive() && sign < 0) sign = +1;  // s == s^{-1}
        out = apply(out, spec.move_of(g, sign));
    }
    return out;
}

SubgroupOracle SubgroupOracle::trivial(GroupFamilySpec spec) {
    return SubgroupOracle(Kind::Trivial, spec);
}

SubgroupOracle SubgroupOracle::whole_group(GroupFamilySpec spec) {
    return SubgroupOracle(Kind::WholeGroup, spec);
}

SubgroupOracle SubgroupOracle::cyclic(GroupFamilySpec spec, Word generator) {
    SubgroupOracle o(Kind::Cyclic, spec);
    Words ws(spec);
    Word w = ws.cyclic_reduce(generator);
    if (ws.is_identity(w)) throw parameter_error("cyclic subgroup generator reduces to the identity");
    o.w_ = std::move(w);
    return o;
}

SubgroupOracle SubgroupOracle::coset_table(GroupFamilySpec spec,
                                           std::vector<std::vector<int32_t>> table) {
    SubgroupOracle o(Kind::CosetTable, spec);
    if (spec.family == Family::FreeAbelian)
        throw parameter_error("coset tables are not supported for abelian families");
    const int nm = spec.num_moves();
    const int n = static_cast<int>(table.size());
    if (n == 0) throw parameter_error("empty coset table");
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != nm) throw parameter_error("coset table row arity mismatch");
        for (int32_t c : row)
            if (c < 0 || c >= n) throw parameter_error("coset table entry out of range");
    }
    // table must be consistent with inverse moves: c.m = c' implies c'.m^{-1} = c
    for (int c = 0; c < n; ++c)
        for (int m = 0; m < nm; ++m)
            if (table[table[c][m]][spec.inverse_move(m)] != c)
                throw parameter_error("coset table not closed under inverse moves");
    o.table_ = std::move(table);
    return o;
}

void SubgroupOracle::check_decidable(const Word& u) const {
    if (max_word_len_ && words_.length(u) > *max_word_len_)
        throw oracle_undecidable_error("membership undecidable beyond word length " +
                                       std::to_string(*max_word_len_));
}

bool SubgroupOracle::member(const Word& u) const {
    check_decidable(u);
    switch (kind_) {
        case Kind::WholeGroup: return true;
        case Kind::Trivial: return words_.is_identity(u);
        case Kind::CosetTable: {
            int c = 0;
            for (int32_t m : u) c = table_[c][m];
            return c == 0;
        }
        case Kind::Cyclic: {
            if (spec_.family == Family::FreeAbelian) {
                // u = j * w for an integer j
                int pivot = 0;
                while (w_[pivot] == 0) ++pivot;
                if (u[pivot] % w_[pivot] != 0) return false;
                int j = u[pivot] / w_[pivot];
                for (int i = 0; i < spec_.rank; ++i)
                    if (u[i] != static_cast<int64_t>(j) * w_[i]) return false;
                return true;
            }
            // cyclically reduced w: powers of w are plain concatenations
            if (u.empty()) return true;
            for (const Word& base : {w_, words_.inverse(w_)}) {
                if (u.size() % base.size() != 0) continue;
                bool ok = true;
                for (size_t i = 0; i < u.size() && ok; ++i)
                    if (u[i] != base[i % base.size()]) ok = false;
                if (ok) return true;
            }
            return false;
        }
    }
    return false;
}

Word SubgroupOracle::coset_key(const Word& u) const {
    check_decidable(u);
    switch (kind_) {
        case Kind::WholeGroup: return words_.identity();
        case Kind::Trivial: return u;
        case Kind::CosetTable: {
            int c = 0;
            for (int32_t m : u) c = table_[c][m];
            return {static_cast<int32_t>(c)};
        }
        case Kind::Cyclic: {
            // Minimize red(w^j u) over j: the length is convex in j, so greedy
            // descent finds the minimum; break ties by shortlex.
            Word cur = u;
            const Word winv = words_.inverse(w_);
            for (;;) {
                Word best = cur;
                for (const Word& side : {w_, winv}) {
                    Word c = words_.concat(side, cur);
                    if (words_.shortlex_less(c, best)) best = c;
                }
                if (best == cur) break;
                cur = std::move(best);
            }
            // neighbors of equal length can still be lex-smaller
            for (const Word& side : {w_, winv}) {
                Word c = words_.concat(side, cur);
                if (words_.length(c) == words_.length(cur) &&
                    words_.shortlex_less(c, cur))
                    cur = std::move(c);
            }
            return cur;
        }
    }
    return u;
}

std::string SubgroupOracle::describe() const {
    switch (kind_) {
        case Kind::Trivial: return "trivial";
        case Kind::WholeGroup: return "whole-group";
        case Kind::Cyclic: return "cyclic:" + words_.to_string(w_);
        case Kind::CosetTable: return "coset-table(" + std::to_string(table_.size()) + ")";
    }
    return "?";
}

}  // namespace cospec
