#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "glab/error.hpp"

namespace glab {

// Z/m1 x ... x Z/md; the empty list is the trivial group
struct Group {
    std::vector<int> mod;

    int64_t order() const;
    int rank() const { return (int)mod.size(); }
    bool operator==(const Group& o) const { return mod == o.mod; }
    bool operator!=(const Group& o) const { return mod != o.mod; }
};

// residues, reduced into [0, m_i)
using Elem = std::vector<int>;

Group make_group(const std::vector<int>& moduli);
Group cyclic(int m);

Elem zero(const Group& g);
Elem make_elem(const Group& g, const std::vector<int64_t>& raw);
Elem add(const Group& g, const Elem& a, const Elem& b);
Elem neg(const Group& g, const Elem& a);
Elem sub(const Group& g, const Elem& a, const Elem& b);
Elem mul(const Group& g, const Elem& a, int64_t n);
void add_into(const Group& g, Elem& acc, const Elem& b);

bool is_zero(const Elem& a);
bool is_valid(const Group& g, const Elem& a);
void check_elem(const Group& g, const Elem& a);

// 2a == 0, i.e. a is zero or an involution
bool twice_zero(const Group& g, const Elem& a);

int64_t element_order(const Group& g, const Elem& a);
bool has_involution(const Group& g);
std::vector<Elem> involutions(const Group& g);  // nonzero a with 2a = 0
std::vector<Elem> elements(const Group& g);      // lexicographic order
std::vector<Elem> cyclic_subgroup(const Group& g, const Elem& a);

// Elements are enumerated in lexicographic order; this is the rank in that order.
int64_t elem_index(const Group& g, const Elem& a);

struct Quotient {
    Group source;
    Group target;  // Z/p
    int p = 0;
    int a = 0;  // source is Z/p^a
    Elem operator()(const Elem& x) const;
};

// canonical surjection Z/p^a -> (Z/p^a)/<p> = Z/p
Quotient quotient_map(const Group& g, int p);

// true if p is prime and m == p^a for some a >= 1; a is written out
bool is_prime_power_of(int64_t m, int p, int& a);
bool is_prime(int64_t n);

}  // namespace glab
