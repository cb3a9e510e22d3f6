#include "skelgraph/field.hpp"

#include <algorithm>

namespace skelgraph {

namespace {

struct FieldParams {
    int q, p, k;
    // Monic modulus, constant term first, length k+1. Empty for prime fields.
    std::vector<int> modulus;
};

const std::vector<FieldParams>& field_params() {
    static const std::vector<FieldParams> table = {
        {2, 2, 1, {}},
        {3, 3, 1, {}},
        {4, 2, 2, {1, 1, 1}},        // x^2 + x + 1
        {5, 5, 1, {}},
        {7, 7, 1, {}},
        {8, 2, 3, {1, 1, 0, 1}},     // x^3 + x + 1
        {9, 3, 2, {1, 0, 1}},        // x^2 + 1
        {11, 11, 1, {}},
        {13, 13, 1, {}},
        {16, 2, 4, {1, 1, 0, 0, 1}}, // x^4 + x + 1
        {25, 5, 2, {2, 0, 1}},       // x^2 + 2
        {27, 3, 3, {1, 2, 0, 1}},    // x^3 + 2x + 1
    };
    return table;
}

// Coefficients of the element with the given index, constant term first.
std::vector<int> digits(int index, int p, int k) {
    std::vector<int> c(k);
    for (int i = 0; i < k; ++i) {
        c[i] = index % p;
        index /= p;
    }
    return c;
}

int index_of(const std::vector<int>& c, int p) {
    int idx = 0;
    for (int i = int(c.size()) - 1; i >= 0; --i) idx = idx * p + c[i];
    return idx;
}

// Product of two coefficient vectors reduced mod the modulus, all over GF(p).
std::vector<int> poly_mul_mod(const std::vector<int>& a, const std::vector<int>& b,
                              const std::vector<int>& modulus, int p) {
    const int k = int(modulus.size()) - 1;
    std::vector<int> prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    // Modulus is monic: subtract c * x^(d-k) * modulus to kill the degree-d term.
    for (int d = int(prod.size()) - 1; d >= k; --d) {
        int c = prod[d];
        if (c == 0) continue;
        for (int i = 0; i <= k; ++i) {
            int pos = d - k + i;
            prod[pos] = ((prod[pos] - c * modulus[i]) % p + p * p) % p;
        }
    }
    prod.resize(k);
    return prod;
}

} // namespace

const std::vector<int>& Field::supported_cardinalities() {
    static const std::vector<int> qs = [] {
        std::vector<int> v;
        for (const auto& s : field_params()) v.push_back(s.q);
        return v;
    }();
    return qs;
}

bool Field::supported(int q) {
    const auto& qs = supported_cardinalities();
    return std::find(qs.begin(), qs.end(), q) != qs.end();
}

Field Field::make(int q) {
    const FieldParams* params = nullptr;
    for (const auto& s : field_params())
        if (s.q == q) params = &s;
    if (!params) throw UnsupportedCardinality(q);

    Field f;
    f.q_ = params->q;
    f.p_ = params->p;
    f.k_ = params->k;
    f.add_.assign(q * q, 0);
    f.mul_.assign(q * q, 0);
    f.neg_.assign(q, 0);
    f.inv_.assign(q, -1);

    if (params->k == 1) {
        for (int a = 0; a < q; ++a) {
            for (int b = 0; b < q; ++b) {
                f.add_[a * q + b] = (a + b) % q;
                f.mul_[a * q + b] = (a * b) % q;
            }
            f.neg_[a] = (q - a) % q;
        }
    } else {
        const int p = params->p, k = params->k;
        for (int a = 0; a < q; ++a) {
            auto ca = digits(a, p, k);
            std::vector<int> na(k);
            for (int i = 0; i < k; ++i) na[i] = (p - ca[i]) % p;
            f.neg_[a] = index_of(na, p);
            for (int b = 0; b < q; ++b) {
                auto cb = digits(b, p, k);
                std::vector<int> sum(k);
                for (int i = 0; i < k; ++i) sum[i] = (ca[i] + cb[i]) % p;
                f.add_[a * q + b] = index_of(sum, p);
                f.mul_[a * q + b] = index_of(poly_mul_mod(ca, cb, params->modulus, p), p);
            }
        }
    }

    for (int a = 1; a < q; ++a)
        for (int b = 1; b < q; ++b)
            if (f.mul_[a * q + b] == 1) f.inv_[a] = b;

    return f;
}

int Field::inv(int a) const {
    if (a == 0 || inv_[a] < 0)
        throw Error("no multiplicative inverse for element " + std::to_string(a) +
                    " in GF(" + std::to_string(q_) + ")");
    return inv_[a];
}

} // namespace skelgraph
