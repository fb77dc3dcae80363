#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cospec/errors.hpp"

namespace cospec {

// The three vertex-transitive families the toolkit knows how to build.
//   free(k)          free group on k generators; moves a,A,b,B,...
//   free-abelian(d)  Z^d; vertices are exponent vectors
//   regular-tree(d)  free product of d copies of Z/2; d involutive moves
enum class Family { Free, FreeAbelian, RegularTree };

// A "move" is one directed generator step. For free/abelian, generator g has
// moves 2g (positive) and 2g+1 (inverse); tree generators are involutive and
// contribute a single move each.
struct GroupFamilySpec {
    Family family = Family::Free;
    int rank = 2;

    static GroupFamilySpec free_group(int k) { return {Family::Free, k}; }
    static GroupFamilySpec free_abelian(int d) { return {Family::FreeAbelian, d}; }
    static GroupFamilySpec regular_tree(int d) { return {Family::RegularTree, d}; }

    bool involutive() const { return family == Family::RegularTree; }
    int num_generators() const { return rank; }
    int num_moves() const { return involutive() ? rank : 2 * rank; }
    int degree() const { return num_moves(); }
    int inverse_move(int m) const { return involutive() ? m : (m ^ 1); }
    int move_generator(int m) const { return involutive() ? m : (m >> 1); }
    int move_sign(int m) const { return involutive() ? +1 : ((m & 1) ? -1 : +1); }
    int move_of(int gen, int sign) const {
        return involutive() ? gen : (2 * gen + (sign < 0 ? 1 : 0));
    }

    bool operator==(const GroupFamilySpec&) const = default;
    std::string tag() const;
    static GroupFamilySpec parse_tag(const std::string& tag);
};

// Canonical vertex identity. For free/tree families: the reduced word as a
// sequence of move indices. For free-abelian: the exponent vector (length d).
using Word = std::vector<int32_t>;

// Free-reduction and canonical-form helpers for one family.
struct Words {
    GroupFamilySpec spec;

    explicit Words(GroupFamilySpec s) : spec(s) {}

    Word identity() const;
    bool is_identity(const Word& w) const;
    int length(const Word& w) const;  // word length (L1 norm for abelian)
    Word apply(const Word& w, int move) const;
    Word concat(const Word& u, const Word& v) const;
    Word inverse(const Word& w) const;
    Word power(const Word& w, int n) const;
    bool shortlex_less(const Word& a, const Word& b) const;

    // Cyclic reduction for free/tree words (identity on abelian).
    Word cyclic_reduce(const Word& w) const;

    std::string to_string(const Word& w) const;
    // Free/tree: letters a..z for generators, A..Z for inverses ("e" = identity).
    // Abelian: comma-separated exponents, e.g. "1,-2".
    Word parse(const std::string& text) const;
};

// Membership and coset identification for the supported subgroup kinds.
// Cyclic subgroups require a cyclically reduced generator word; arbitrary
// finite-index subgroups enter through explicit coset tables
// (table[coset][move] -> coset, coset 0 = the subgroup itself).
class SubgroupOracle {
  public:
    enum class Kind { Trivial, WholeGroup, Cyclic, CosetTable };

    static SubgroupOracle trivial(GroupFamilySpec spec);
    static SubgroupOracle whole_group(GroupFamilySpec spec);
    static SubgroupOracle cyclic(GroupFamilySpec spec, Word generator);
    static SubgroupOracle coset_table(GroupFamilySpec spec, std::vector<std::vector<int32_t>> table);

    Kind kind() const { return kind_; }
    const GroupFamilySpec& spec() const { return spec_; }
    const Word& cyclic_generator() const { return w_; }

    // Optional decidability horizon; membership/coset queries on longer words
    // raise oracle_undecidable_error. Unlimited by default.
    void set_max_word_len(int n) { max_word_len_ = n; }

    bool member(const Word& u) const;
    // Canonical representative of the right coset H·u (shortlex-minimal coset
    // element). For coset tables the representative is {coset id}.
    Word coset_key(const Word& u) const;

    std::string describe() const;

  private:
    SubgroupOracle(Kind k, GroupFamilySpec spec) : kind_(k), spec_(spec), words_(spec) {}
    void check_decidable(const Word& u) const;

    Kind kind_;
    GroupFamilySpec spec_;
    Words words_;
    Word w_;          // cyclic generator, cyclically reduced
    std::vector<std::vector<int32_t>> table_;
    std::optional<int> max_word_len_;
};

}  // namespace cospec
