// Copyright 2026 The Weldcode Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "weldcode/pauli.h"

#include <algorithm>
#include <charconv>
#include <ostream>
#include <sstream>

#include "weldcode/errors.h"

namespace weldcode {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

size_t parse_index(std::string_view s) {
    s = trim(s);
    size_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
        throw ValidationError("bad qubit index '" + std::string(s) + "'");
    }
    return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    size_t start = 0;
    while (true) {
        size_t k = s.find(sep, start);
        out.push_back(s.substr(start, k == std::string_view::npos ? std::string_view::npos : k - start));
        if (k == std::string_view::npos) {
            return out;
        }
        start = k + 1;
    }
}

void require_same_n(const PauliOperator &a, const PauliOperator &b) {
    if (a.n() != b.n()) {
        throw ValidationError("qubit count mismatch: " + std::to_string(a.n()) + " vs " + std::to_string(b.n()));
    }
}

PauliOperator parse_sparse(std::string_view text) {
    auto fields = split(text, ';');
    auto head = trim(fields[0]);
    if (head.substr(0, 2) != "n=") {
        throw ValidationError("sparse operator must start with n=");
    }
    size_t n = parse_index(head.substr(2));
    PauliOperator p(n);
    BitVector x(n), z(n);
    for (size_t i = 1; i < fields.size(); i++) {
        auto f = trim(fields[i]);
        if (f.empty()) {
            continue;
        }
        auto colon = f.find(':');
        if (colon == std::string_view::npos) {
            throw ValidationError("bad sparse field '" + std::string(f) + "'");
        }
        auto tag = trim(f.substr(0, colon));
        auto body = trim(f.substr(colon + 1));
        if (tag != "X" && tag != "Z" && tag != "Y") {
            throw ValidationError("bad sparse tag '" + std::string(tag) + "'");
        }
        if (body.empty()) {
            continue;
        }
        for (auto item : split(body, ',')) {
            size_t q = parse_index(item);
            if (q >= n) {
                throw ValidationError("qubit index " + std::to_string(q) + " out of range");
            }
            if (tag != "Z") {
                x.set(q);
            }
            if (tag != "X") {
                z.set(q);
            }
        }
    }
    return PauliOperator(std::move(x), std::move(z));
}

}  // namespace

PauliKind parse_kind(std::string_view s) {
    if (s == "x" || s == "X") {
        return PauliKind::X;
    }
    if (s == "z" || s == "Z") {
        return PauliKind::Z;
    }
    throw ValidationError("expected x or z, got '" + std::string(s) + "'");
}

QubitSet::QubitSet(std::vector<size_t> indices) : indices_(std::move(indices)) {
    std::sort(indices_.begin(), indices_.end());
    indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
}

bool QubitSet::contains(size_t q) const { return std::binary_search(indices_.begin(), indices_.end(), q); }

BitVector QubitSet::mask(size_t n) const {
    BitVector out(n);
    for (size_t q : indices_) {
        if (q >= n) {
            throw ValidationError("qubit index " + std::to_string(q) + " out of range for n=" + std::to_string(n));
        }
        out.set(q);
    }
    return out;
}

PauliOperator::PauliOperator(BitVector x_bits, BitVector z_bits) : x_(std::move(x_bits)), z_(std::move(z_bits)) {
    if (x_.size() != z_.size()) {
        throw ValidationError("x_bits and z_bits differ in length");
    }
}

PauliOperator PauliOperator::from_support(size_t n, PauliKind kind, const std::vector<size_t> &support) {
    return from_bits(kind, QubitSet(support).mask(n));
}

PauliOperator PauliOperator::from_bits(PauliKind kind, BitVector bits) {
    BitVector zero(bits.size());
    if (kind == PauliKind::X) {
        return PauliOperator(std::move(bits), std::move(zero));
    }
    return PauliOperator(std::move(zero), std::move(bits));
}

PauliOperator PauliOperator::parse(std::string_view text) {
    text = trim(text);
    if (text.substr(0, 2) == "n=") {
        return parse_sparse(text);
    }
    size_t n = text.size();
    BitVector x(n), z(n);
    for (size_t q = 0; q < n; q++) {
        switch (text[q]) {
            case 'I':
            case '_':
                break;
            case 'X':
                x.set(q);
                break;
            case 'Z':
                z.set(q);
                break;
            case 'Y':
                x.set(q);
                z.set(q);
                break;
            default:
                throw ValidationError("bad Pauli character '" + std::string(1, text[q]) + "'");
        }
    }
    return PauliOperator(std::move(x), std::move(z));
}

QubitSet PauliOperator::support() const { return QubitSet((x_ | z_).ones()); }

std::string PauliOperator::dense_str() const {
    std::string out(n(), 'I');
    for (size_t q = 0; q < n(); q++) {
        out[q] = "IXZY"[x_.get(q) + 2 * z_.get(q)];
    }
    return out;
}

std::string PauliOperator::sparse_str() const {
    std::ostringstream out;
    out << "n=" << n();
    auto emit = [&](char tag, const std::vector<size_t> &qs) {
        if (qs.empty()) {
            return;
        }
        out << "; " << tag << ":";
        for (size_t i = 0; i < qs.size(); i++) {
            out << (i ? "," : "") << qs[i];
        }
    };
    emit('X', x_.ones());
    emit('Z', z_.ones());
    return out.str();
}

std::string PauliOperator::str() const { return n() <= 64 ? dense_str() : sparse_str(); }

PauliOperator &PauliOperator::operator*=(const PauliOperator &other) {
    require_same_n(*this, other);
    x_ ^= other.x_;
    z_ ^= other.z_;
    return *this;
}

PauliOperator multiply(const PauliOperator &a, const PauliOperator &b) {
    PauliOperator out = a;
    out *= b;
    return out;
}

bool symplectic(const PauliOperator &a, const PauliOperator &b) {
    require_same_n(a, b);
    return a.x_bits().dot(b.z_bits()) ^ a.z_bits().dot(b.x_bits());
}

bool commutes(const PauliOperator &a, const PauliOperator &b) { return !symplectic(a, b); }

PauliOperator restrict_theta(const PauliOperator &p, const QubitSet &support) {
    BitVector m = support.mask(p.n());
    return PauliOperator(p.x_bits() & m, p.z_bits() & m);
}

PauliOperator weld_restrict(const PauliOperator &p, const QubitSet &shared) { return restrict_theta(p, shared); }

size_t weight(const PauliOperator &p) { return p.weight(); }

PauliOperator embed_operator(const PauliOperator &p, const std::vector<size_t> &map, size_t new_n) {
    if (map.size() != p.n()) {
        throw ValidationError("embedding map has wrong length");
    }
    BitVector x(new_n), z(new_n);
    for (size_t q : (p.x_bits() | p.z_bits()).ones()) {
        if (map[q] >= new_n) {
            throw ValidationError("embedding target out of range");
        }
        x.set(map[q], p.x_bits().get(q));
        z.set(map[q], p.z_bits().get(q));
    }
    return PauliOperator(std::move(x), std::move(z));
}

std::ostream &operator<<(std::ostream &out, const PauliOperator &p) { return out << p.str(); }

}  // namespace weldcode
