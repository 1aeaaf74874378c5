#include "posetkit/fixpoint.hpp"

namespace posetkit {

namespace {

void check_h_table(const Poset& p, const std::vector<int>& h) {
    if (h.size() != static_cast<size_t>(p.size()))
        throw Error(Errc::precondition_failed,
                    "h table has " + std::to_string(h.size()) + " entries for a poset of " +
                        std::to_string(p.size()));
    for (int v : h)
        if (v < 0 || v >= p.size())
            throw Error(Errc::precondition_failed, "h table entry out of range");
}

} // namespace

std::vector<SubsetBits> validate_cpo_finite(const Poset& p, int limit) {
    std::vector<SubsetBits> missing;
    for_each_chain(
        p,
        [&](const SubsetBits& c) {
            if (!sup_of(p, c)) missing.push_back(c);
        },
        limit);
    return missing;
}

FinitePosetCpo::FinitePosetCpo(Poset p, int limit) : p_(std::move(p)) {
    std::vector<SubsetBits> missing = validate_cpo_finite(p_, limit);
    if (!missing.empty())
        throw Error(Errc::precondition_failed,
                    std::to_string(missing.size()) +
                        " chain(s) have no least upper bound; not a valid cpo");
    bottom_ = *sup_of(p_, p_.empty_subset());
}

AbstractCpo<int> FinitePosetCpo::as_abstract() const {
    AbstractCpo<int> cpo;
    cpo.bottom = bottom_;
    cpo.equal = [](const int& a, const int& b) { return a == b; };
    const Poset* p = &p_;
    cpo.leq = [p](const int& a, const int& b) { return p->leq(a, b); };
    return cpo;
}

FixpointReport<int> bw_fixpoint_finite(const Poset& p, const std::vector<int>& h, long cap,
                                       int limit) {
    check_h_table(p, h);
    FinitePosetCpo cpo(p, limit);
    for (int i = 0; i < p.size(); ++i)
        if (!p.leq(i, h[static_cast<size_t>(i)]))
            throw Error(Errc::not_inflationary,
                        "h('" + p.label(i) + "') = '" + p.label(h[static_cast<size_t>(i)]) +
                            "' is not above '" + p.label(i) + "'");
    return bw_fixpoint(
        cpo.as_abstract(), [&h](const int& x) { return h[static_cast<size_t>(x)]; }, cap);
}

bool bw_chain_equals_ggc(const Poset& p, const std::vector<int>& h, int limit) {
    check_h_table(p, h);
    if (!validate_cpo_finite(p, limit).empty())
        throw Error(Errc::precondition_failed, "poset is not a valid cpo");
    for (int i = 0; i < p.size(); ++i)
        if (!p.leq(i, h[static_cast<size_t>(i)]))
            throw Error(Errc::precondition_failed, "h is not inflationary at '" + p.label(i) + "'");

    FixpointReport<int> rep = bw_fixpoint_finite(p, h, kDefaultFixpointCap, limit);
    SubsetBits iterates = p.empty_subset();
    for (int x : rep.trace) iterates.set(x);

    Expander g = Expander::from_function([&h](const Poset& q, const SubsetBits& c) {
        std::optional<int> s = sup_of(q, c);
        if (!s) return c; // unreachable once the cpo check passed
        SubsetBits out = c;
        out.set(c.test(*s) ? h[static_cast<size_t>(*s)] : *s);
        return out;
    });
    GoodChainReport ggc = greatest_good_chain_bruteforce(p, g, limit);
    return ggc.chain == iterates;
}

} // namespace posetkit
