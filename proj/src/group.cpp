#include "glab/group.hpp"

#include <numeric>
#include <string>

namespace glab {

int64_t Group::order() const {
    int64_t o = 1;
    for (int m : mod) o *= m;
    return o;
}

Group make_group(const std::vector<int>& moduli) {
    for (int m : moduli)
        if (m <= 0) throw DomainError("modulus must be >= 1, got " + std::to_string(m));
    return Group{moduli};
}

Group cyclic(int m) { return make_group({m}); }

Elem zero(const Group& g) { return Elem(g.mod.size(), 0); }

Elem make_elem(const Group& g, const std::vector<int64_t>& raw) {
    if (raw.size() != g.mod.size()) throw DomainError("element has wrong number of coordinates");
    Elem e(raw.size());
    for (size_t i = 0; i < raw.size(); i++) {
        int64_t m = g.mod[i];
        e[i] = (int)(((raw[i] % m) + m) % m);
    }
    return e;
}

static void same_shape(const Group& g, const Elem& a, const Elem& b) {
    if (a.size() != g.mod.size() || b.size() != g.mod.size())
        throw DomainError("group element does not belong to this group");
}

Elem add(const Group& g, const Elem& a, const Elem& b) {
    same_shape(g, a, b);
    Elem r(a.size());
    for (size_t i = 0; i < a.size(); i++) {
        int s = a[i] + b[i];
        r[i] = s >= g.mod[i] ? s - g.mod[i] : s;
    }
    return r;
}

void add_into(const Group& g, Elem& acc, const Elem& b) {
    same_shape(g, acc, b);
    for (size_t i = 0; i < acc.size(); i++) {
        int s = acc[i] + b[i];
        acc[i] = s >= g.mod[i] ? s - g.mod[i] : s;
    }
}

Elem neg(const Group& g, const Elem& a) {
    same_shape(g, a, a);
    Elem r(a.size());
    for (size_t i = 0; i < a.size(); i++) r[i] = a[i] == 0 ? 0 : g.mod[i] - a[i];
    return r;
}

Elem sub(const Group& g, const Elem& a, const Elem& b) { return add(g, a, neg(g, b)); }

Elem mul(const Group& g, const Elem& a, int64_t n) {
    same_shape(g, a, a);
    Elem r(a.size());
    for (size_t i = 0; i < a.size(); i++) {
        int64_t m = g.mod[i];
        int64_t k = ((n % m) + m) % m;
        r[i] = (int)((k * a[i]) % m);
    }
    return r;
}

bool is_zero(const Elem& a) {
    for (int x : a)
        if (x) return false;
    return true;
}

bool is_valid(const Group& g, const Elem& a) {
    if (a.size() != g.mod.size()) return false;
    for (size_t i = 0; i < a.size(); i++)
        if (a[i] < 0 || a[i] >= g.mod[i]) return false;
    return true;
}

void check_elem(const Group& g, const Elem& a) {
    if (!is_valid(g, a)) throw DomainError("label is not a reduced element of the group");
}

bool twice_zero(const Group& g, const Elem& a) {
    for (size_t i = 0; i < a.size(); i++)
        if ((2 * a[i]) % g.mod[i]) return false;
    return true;
}

int64_t element_order(const Group& g, const Elem& a) {
    check_elem(g, a);
    int64_t o = 1;
    for (size_t i = 0; i < a.size(); i++) {
        int64_t m = g.mod[i];
        int64_t oi = m / std::gcd<int64_t>(m, a[i]);
        o = std::lcm(o, oi);
    }
    return o;
}

bool has_involution(const Group& g) {
    for (int m : g.mod)
        if (m % 2 == 0) return true;
    return false;
}

std::vector<Elem> elements(const Group& g) {
    std::vector<Elem> out;
    Elem cur = zero(g);
    int64_t n = g.order();
    out.reserve(n);
    for (int64_t k = 0; k < n; k++) {
        out.push_back(cur);
        for (int i = (int)cur.size() - 1; i >= 0; i--) {
            if (++cur[i] < g.mod[i]) break;
            cur[i] = 0;
        }
    }
    return out;
}

int64_t elem_index(const Group& g, const Elem& a) {
    int64_t idx = 0;
    for (size_t i = 0; i < a.size(); i++) idx = idx * g.mod[i] + a[i];
    return idx;
}

std::vector<Elem> involutions(const Group& g) {
    std::vector<Elem> out;
    // each coordinate is 0 or m/2 (m even)
    std::vector<std::vector<int>> choices;
    for (int m : g.mod) {
        if (m % 2 == 0) choices.push_back({0, m / 2});
        else choices.push_back({0});
    }
    Elem cur = zero(g);
    std::function<void(size_t)> rec = [&](size_t i) {
        if (i == choices.size()) {
            if (!is_zero(cur)) out.push_back(cur);
            return;
        }
        for (int c : choices[i]) {
            cur[i] = c;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

std::vector<Elem> cyclic_subgroup(const Group& g, const Elem& a) {
    int64_t o = element_order(g, a);
    std::vector<Elem> out;
    Elem cur = zero(g);
    for (int64_t k = 0; k < o; k++) {
        out.push_back(cur);
        cur = add(g, cur, a);
    }
    return out;
}

bool is_prime(int64_t n) {
    if (n < 2) return false;
    for (int64_t d = 2; d * d <= n; d++)
        if (n % d == 0) return false;
    return true;
}

bool is_prime_power_of(int64_t m, int p, int& a) {
    if (!is_prime(p) || m < p) return false;
    a = 0;
    while (m % p == 0) {
        m /= p;
        a++;
    }
    return m == 1;
}

Elem Quotient::operator()(const Elem& x) const {
    check_elem(source, x);
    return Elem{x[0] % p};
}

Quotient quotient_map(const Group& g, int p) {
    int a = 0;
    if (g.rank() != 1 || !is_prime_power_of(g.mod[0], p, a))
        throw DomainError("quotient_map needs a cyclic group of order p^a with p prime");
    Quotient q;
    q.source = g;
    q.target = cyclic(p);
    q.p = p;
    q.a = a;
    return q;
}

}  // namespace glab
