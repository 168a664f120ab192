// Input builders: diagonal finite-order actions on projective space and
// product covers of weighted projective spaces.
//
// For a diagonal action with weights a_0..a_n mod N on P^n = P(V), the
// fixed set of zeta_N^{a_j}-multiplication is the disjoint union over
// distinct weight values lambda of P(V_lambda). On P(V_lambda):
//   tangent: k_lambda lines of root x minus one trivial line (Euler
//            sequence, k_lambda = multiplicity of lambda),
//   normal:  for each other value mu, k_mu lines of root x with rotation
//            (a_mu - a_lambda)/N.
#ifndef EQCLASS_BUILDERS_HPP
#define EQCLASS_BUILDERS_HPP

#include "eqclass/localization.hpp"

namespace eqclass {

inline std::vector<FixedComponent> diagonal_fixed_components(
    const std::vector<long>& weights, long conductor) {
    std::map<long, int> multiplicity;
    for (long a : weights) {
        long v = a % conductor;
        if (v < 0) v += conductor;
        ++multiplicity[v];
    }
    std::vector<FixedComponent> comps;
    for (const auto& [lambda, k] : multiplicity) {
        RingPtr ring = projective_ring(k - 1);
        TruncSeries x = TruncSeries::variable(ring, 0);
        FixedComponent c("L" + std::to_string(lambda), ring);
        c.tangent.add_line(x, Angle::zero(), 0, k);
        c.tangent.add_trivial_line(Angle::zero(), 0, -1);
        for (const auto& [mu, km] : multiplicity) {
            if (mu == lambda) continue;
            c.normal.add_line(x, Angle(mu - lambda, conductor), 0, km);
        }
        comps.push_back(std::move(c));
    }
    return comps;
}

// cyclic group Z/N acting on P^n by diag(zeta^{a_0}, ..., zeta^{a_n})
inline LocalizationDatum build_projective_datum(int n,
                                                const std::vector<long>& weights,
                                                long conductor) {
    if (conductor < 1) throw invalid_weights("conductor must be positive");
    if (static_cast<int>(weights.size()) != n + 1)
        throw invalid_weights("need n+1 weights");
    for (long a : weights)
        if (a < 0 || a >= conductor)
            throw invalid_weights("weights must satisfy 0 <= a < conductor");

    LocalizationDatum d;
    d.conductor = conductor;
    d.group.order = conductor;
    std::vector<std::vector<size_t>> mul(
        static_cast<size_t>(conductor),
        std::vector<size_t>(static_cast<size_t>(conductor)));
    for (long k = 0; k < conductor; ++k) {
        d.group.elements.push_back(k == 0 ? "id" : "g" + std::to_string(k));
        for (long j = 0; j < conductor; ++j)
            mul[static_cast<size_t>(k)][static_cast<size_t>(j)] =
                static_cast<size_t>((k + j) % conductor);
    }
    d.group.mul = std::move(mul);
    for (long k = 0; k < conductor; ++k) {
        std::vector<long> scaled;
        for (long a : weights) scaled.push_back((k * a) % conductor);
        d.fixed_data.emplace(d.group.elements[static_cast<size_t>(k)],
                             diagonal_fixed_components(scaled, conductor));
    }
    return d;
}

// G(w) = G(w_0) x ... x G(w_n) acting on homogeneous coordinates of P^n;
// this is the cover datum whose quotient is P^n(w). The multiplication
// table is attached only for small groups (it is quadratic in |G|).
inline LocalizationDatum build_wproj_cover_datum(const std::vector<long>& w) {
    if (w.empty()) throw invalid_weights("empty weight vector");
    for (long wj : w)
        if (wj < 1) throw invalid_weights("weights must be positive");
    long conductor = 1;
    for (long wj : w) conductor = std::lcm(conductor, wj);

    long order = 1;
    for (long wj : w) {
        if (order > (1L << 40) / wj)
            throw invalid_weights("group order too large");
        order *= wj;
    }

    LocalizationDatum d;
    d.conductor = conductor;
    d.group.order = order;

    auto label_of = [&](const std::vector<long>& k) {
        bool all_zero = true;
        for (long v : k) all_zero = all_zero && v == 0;
        if (all_zero) return std::string("id");
        std::string s;
        for (size_t j = 0; j < k.size(); ++j) {
            if (j) s += ",";
            s += std::to_string(k[j]);
        }
        return s;
    };

    std::vector<long> k(w.size(), 0);
    bool done = false;
    while (!done) {
        std::vector<long> weights;
        for (size_t j = 0; j < w.size(); ++j)
            weights.push_back((k[j] * (conductor / w[j])) % conductor);
        d.group.elements.push_back(label_of(k));
        d.fixed_data.emplace(label_of(k),
                             diagonal_fixed_components(weights, conductor));
        // odometer over the factor groups
        done = true;
        for (size_t j = w.size(); j-- > 0;) {
            if (++k[j] < w[j]) {
                done = false;
                break;
            }
            k[j] = 0;
        }
    }

    if (order <= 128) {
        size_t n = d.group.elements.size();
        auto decode = [&](size_t idx) {
            std::vector<long> v(w.size());
            for (size_t j = w.size(); j-- > 0;) {
                v[j] = static_cast<long>(idx) % w[j];
                idx /= static_cast<size_t>(w[j]);
            }
            return v;
        };
        auto encode = [&](const std::vector<long>& v) {
            size_t idx = 0;
            for (size_t j = 0; j < w.size(); ++j)
                idx = idx * static_cast<size_t>(w[j]) +
                      static_cast<size_t>(v[j]);
            return idx;
        };
        std::vector<std::vector<size_t>> mul(n, std::vector<size_t>(n));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                std::vector<long> a = decode(i), b = decode(j);
                for (size_t t = 0; t < w.size(); ++t)
                    a[t] = (a[t] + b[t]) % w[t];
                mul[i][j] = encode(a);
            }
        d.group.mul = std::move(mul);
    }
    return d;
}

// one-point space with the trivial group; the unit for exterior products
inline LocalizationDatum point_datum() {
    LocalizationDatum d;
    d.conductor = 1;
    d.group.order = 1;
    d.group.elements = {"id"};
    d.group.mul = std::vector<std::vector<size_t>>{{0}};
    FixedComponent pt("pt", point_ring());
    d.fixed_data.emplace("id", std::vector<FixedComponent>{std::move(pt)});
    return d;
}

} // namespace eqclass

#endif
