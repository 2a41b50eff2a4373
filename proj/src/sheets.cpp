#include "sheetlab/sheets.hpp"

#include "sheetlab/errors.hpp"
#include "sheetlab/minor_gcd.hpp"

#include <functional>
#include <stdexcept>

namespace sheetlab {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) {
            throw InputError("partition parts must be positive");
        }
        if (i > 0 && parts_[i] > parts_[i - 1]) {
            throw InputError("partition parts must be weakly decreasing");
        }
        total_ += parts_[i];
    }
    if (parts_.empty()) {
        throw InputError("partition must have at least one part");
    }
}

int Partition::part(std::size_t i) const {
    if (i == 0) {
        throw std::out_of_range("partition parts are 1-based");
    }
    return i <= parts_.size() ? parts_[i - 1] : 0;
}

std::string Partition::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        out += (i == 0 ? "" : ",") + std::to_string(parts_[i]);
    }
    return out + ")";
}

Partition conjugate(const Partition& sigma) {
    std::vector<int> c;
    for (int j = 1; j <= sigma.part(1); ++j) {
        int count = 0;
        for (int b : sigma.parts()) {
            count += b >= j ? 1 : 0;
        }
        c.push_back(count);
    }
    return Partition(std::move(c));
}

bool dominates(const Partition& a, const Partition& b) {
    if (a.total() != b.total()) {
        throw InputError("dominance compares partitions of the same integer");
    }
    int sa = 0;
    int sb = 0;
    const std::size_t len = std::max(a.length(), b.length());
    for (std::size_t i = 1; i <= len; ++i) {
        sa += a.part(i);
        sb += b.part(i);
        if (sa < sb) {
            return false;
        }
    }
    return true;
}

std::vector<Partition> partitions_of(int n) {
    if (n < 1) {
        throw InputError("partitions_of requires n >= 1");
    }
    std::vector<Partition> out;
    std::vector<int> current;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            current.push_back(p);
            rec(remaining - p, p);
            current.pop_back();
        }
    };
    rec(n, n);
    return out;
}

SheetDescriptor describe_sheet(const Partition& sigma) {
    SheetDescriptor d;
    d.sigma = sigma;
    d.conjugate = conjugate(sigma);
    const int n = sigma.total();
    int sum_sq = 0;
    for (int c : d.conjugate.parts()) {
        sum_sq += c * c;
    }
    d.orbit_dim = n * n - sum_sq;
    d.quotient_dim = sigma.part(1) - 1;
    return d;
}

SheetDescriptor classify_sheet(const RationalMatrix& x) {
    if (!x.trace().is_zero()) {
        throw TraceError("classify_sheet requires a traceless matrix, trace is " + x.trace().to_string());
    }
    const auto profile = gcd_minor_profile(x);
    std::vector<int> parts;
    for (std::size_t i = 1; i <= x.size(); ++i) {
        const std::size_t d = profile.q(i).degree_nonzero();
        if (d == 0) {
            break;
        }
        if (!parts.empty() && static_cast<int>(d) > parts.back()) {
            throw std::logic_error("invariant factor degrees are not weakly decreasing");
        }
        parts.push_back(static_cast<int>(d));
    }
    for (std::size_t i = parts.size() + 1; i <= x.size(); ++i) {
        if (profile.q(i).degree_nonzero() != 0) {
            throw std::logic_error("nonconstant invariant factor after a constant one");
        }
    }
    return describe_sheet(Partition(std::move(parts)));
}

RationalMatrix nilpotent_representative(const Partition& sigma) {
    const auto n = static_cast<std::size_t>(sigma.total());
    RationalMatrix m(n, Ambient::sl);
    std::size_t offset = 0;
    for (int b : sigma.parts()) {
        for (std::size_t k = 0; k + 1 < static_cast<std::size_t>(b); ++k) {
            m(offset + k, offset + k + 1) = 1;
        }
        offset += static_cast<std::size_t>(b);
    }
    return m;
}

std::vector<SheetDescriptor> enumerate_sheets(int n) {
    std::vector<SheetDescriptor> out;
    for (const auto& p : partitions_of(n)) {
        out.push_back(describe_sheet(p));
    }
    return out;
}

}  // namespace sheetlab
