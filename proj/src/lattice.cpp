#include "floerlab/lattice.hpp"

#include "floerlab/error.hpp"

#include <numeric>

namespace floerlab {

std::string to_string(ClassContext context)
{
    switch (context) {
    case ClassContext::HF: return "HF";
    case ClassContext::PFH: return "PFH";
    case ClassContext::CO: return "CO";
    }
    return "HF";
}

ClassContext parse_class_context(const std::string& text)
{
    if (text == "HF") return ClassContext::HF;
    if (text == "PFH") return ClassContext::PFH;
    if (text == "CO") return ClassContext::CO;
    throw ModelError("unknown class context: " + text);
}

namespace {

long sum(const std::vector<long>& v) { return std::accumulate(v.begin(), v.end(), 0L); }

void check_index(const RelClass& a, int i)
{
    if (i < 0 || i > a.k) throw ModelError("disk index out of range: " + std::to_string(i));
}

}  // namespace

RelClass RelClass::zero(ClassContext context, int k, std::string anchor, Rational anchor_energy)
{
    if (k < 1) throw ModelError("class lattice needs k >= 1");
    RelClass a;
    a.context = context;
    a.k = k;
    a.anchor = std::move(anchor);
    a.anchor_energy = std::move(anchor_energy);
    a.coeff_B.assign(k, 0);
    a.coeff_phiB.assign(k, 0);
    a.coeff_Bc.assign(k, 0);
    a.coeff_phiBc.assign(k, 0);
    return a;
}

RelClass& RelClass::add_disk(int i, long times)
{
    check_index(*this, i);
    if (context == ClassContext::PFH) throw ModelError("PFH classes only carry multiples of [Sigma]");
    if (i == k) {
        coeff_Sigma += times;
        for (auto& c : coeff_B) c -= times;
    } else {
        coeff_B[i] += times;
    }
    return *this;
}

RelClass& RelClass::add_phi_disk(int i, long times)
{
    check_index(*this, i);
    if (context != ClassContext::HF) throw ModelError("[phi_H(B_i)] only exists in the HF lattice");
    if (i == k) {
        coeff_Sigma += times;
        for (auto& c : coeff_phiB) c -= times;
    } else {
        coeff_phiB[i] += times;
    }
    return *this;
}

RelClass& RelClass::add_disk_complement(int i, long times)
{
    check_index(*this, i);
    if (context != ClassContext::HF) throw ModelError("[B_i^c] only exists in the HF lattice");
    if (i == k) {
        // B_{k+1}^c is the union of the k disks.
        for (auto& c : coeff_B) c += times;
    } else {
        coeff_Bc[i] += times;
    }
    return *this;
}

RelClass& RelClass::add_phi_disk_complement(int i, long times)
{
    check_index(*this, i);
    if (context != ClassContext::HF) throw ModelError("[phi_H(B_i^c)] only exists in the HF lattice");
    if (i == k) {
        for (auto& c : coeff_phiB) c += times;
    } else {
        coeff_phiBc[i] += times;
    }
    return *this;
}

RelClass& RelClass::add_sigma(long times)
{
    coeff_Sigma += times;
    return *this;
}

RelClass RelClass::reduced() const
{
    RelClass r = *this;
    for (int i = 0; i < k; ++i) {
        r.coeff_Sigma += r.coeff_Bc[i] + r.coeff_phiBc[i];
        r.coeff_B[i] -= r.coeff_Bc[i];
        r.coeff_phiB[i] -= r.coeff_phiBc[i];
        r.coeff_Bc[i] = 0;
        r.coeff_phiBc[i] = 0;
    }
    return r;
}

bool RelClass::is_reduced() const
{
    for (int i = 0; i < k; ++i)
        if (coeff_Bc[i] != 0 || coeff_phiBc[i] != 0) return false;
    return true;
}

void check_context(const RelClass& a)
{
    auto nonzero = [](const std::vector<long>& v) {
        for (long x : v)
            if (x != 0) return true;
        return false;
    };
    const int k = a.k;
    if (static_cast<int>(a.coeff_B.size()) != k || static_cast<int>(a.coeff_phiB.size()) != k ||
        static_cast<int>(a.coeff_Bc.size()) != k || static_cast<int>(a.coeff_phiBc.size()) != k)
        throw ModelError("coefficient vectors must have length k");
    switch (a.context) {
    case ClassContext::PFH:
        if (nonzero(a.coeff_B) || nonzero(a.coeff_phiB) || nonzero(a.coeff_Bc) || nonzero(a.coeff_phiBc))
            throw ModelError("PFH classes only carry multiples of [Sigma]");
        break;
    case ClassContext::CO:
        if (nonzero(a.coeff_phiB) || nonzero(a.coeff_Bc) || nonzero(a.coeff_phiBc))
            throw ModelError("CO classes only carry [B_i] and [Sigma]");
        break;
    case ClassContext::HF: break;
    }
}

ClassDiff ClassDiff::zero(int k)
{
    ClassDiff d;
    d.c.assign(k, 0);
    d.c_phi.assign(k, 0);
    d.d.assign(k, 0);
    d.d_phi.assign(k, 0);
    return d;
}

ClassDiff ClassDiff::operator+(const ClassDiff& o) const
{
    if (o.k() != k()) throw ModelError("adding difference records of different k");
    ClassDiff r = *this;
    for (int i = 0; i < k(); ++i) {
        r.c[i] += o.c[i];
        r.c_phi[i] += o.c_phi[i];
        r.d[i] += o.d[i];
        r.d_phi[i] += o.d_phi[i];
    }
    r.m += o.m;
    return r;
}

ClassDiff class_diff(const RelClass& a_prime, const RelClass& a)
{
    if (a_prime.context != a.context) throw ModelError("class_diff: context mismatch");
    if (a_prime.k != a.k) throw ModelError("class_diff: k mismatch");
    if (a_prime.anchor != a.anchor) throw ModelError("class_diff: anchor mismatch");
    const RelClass x = a_prime.reduced();
    const RelClass y = a.reduced();
    ClassDiff out = ClassDiff::zero(a.k);
    for (int i = 0; i < a.k; ++i) {
        out.c[i] = x.coeff_B[i] - y.coeff_B[i];
        out.c_phi[i] = x.coeff_phiB[i] - y.coeff_phiB[i];
    }
    out.m = x.coeff_Sigma - y.coeff_Sigma;
    return out;
}

Rational energy(const ClassDiff& diff)
{
    const long k = diff.k();
    Rational e = make_rational(sum(diff.c) + sum(diff.c_phi), k + 1);
    e += make_rational(k * (sum(diff.d) + sum(diff.d_phi)), k + 1);
    e += diff.m;
    return e;
}

Rational energy(const RelClass& a)
{
    ClassDiff rec{a.coeff_B, a.coeff_phiB, a.coeff_Bc, a.coeff_phiBc, a.coeff_Sigma};
    return a.anchor_energy + energy(rec);
}

Rational energy(const RelClass& a, const SurfaceLinkModel& model)
{
    if (a.k != model.k()) throw ModelError("class and model disagree on k");
    return energy(a);
}

bool capping_equivalent(const RelClass& a, const RelClass& b)
{
    return a.context == b.context && a.anchor == b.anchor && energy(a) == energy(b);
}

std::vector<long> RegionIncidence::all() const
{
    std::vector<long> out = main;
    out.insert(out.end(), bigons.begin(), bigons.end());
    return out;
}

RegionIncidence intersection_numbers(const RelClass& a, const SurfaceLinkModel& model)
{
    if (a.context != ClassContext::HF) throw ModelError("intersection numbers are defined on HF classes");
    if (a.k != model.k()) throw ModelError("class and model disagree on k");
    const RelClass r = a.reduced();
    const int k = r.k;
    const long m = r.coeff_Sigma;

    RegionIncidence n;
    n.main.assign(k + 1, m);
    for (int i = 0; i < k; ++i) n.main[i] += r.coeff_B[i] + r.coeff_phiB[i];
    n.bigons.assign(2 * model.d, m);
    for (int i = 0; i < k; ++i) {
        n.bigons[2 * i] += r.coeff_B[i];
        n.bigons[2 * i + 1] += r.coeff_phiB[i];
    }
    return n;
}

bool is_positive(const RelClass& a, const SurfaceLinkModel& model)
{
    for (long x : intersection_numbers(a, model).all())
        if (x < 0) return false;
    return true;
}

}  // namespace floerlab
