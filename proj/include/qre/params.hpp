#pragma once

#include <algorithm>
#include <memory>
#include <string>
#include <vector>

#include "qre/errors.hpp"

namespace qre {

// An ordered set of commuting parameter names. The deformation parameter q is
// always present and always first. A parameter set is declared once and shared
// by every scalar of a computation; mixing scalars over different sets is an
// error rather than an implicit promotion.
class ParamSet {
  public:
    static std::shared_ptr<const ParamSet> make(std::vector<std::string> extra = {}) {
        std::vector<std::string> names{"q"};
        for (auto& n : extra) {
            if (n == "q") continue;
            if (std::find(names.begin(), names.end(), n) != names.end())
                throw ParamMismatch("duplicate parameter name: " + n);
            names.push_back(std::move(n));
        }
        return std::shared_ptr<const ParamSet>(new ParamSet(std::move(names)));
    }

    size_t size() const { return names_.size(); }
    const std::string& name(size_t i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }

    // Index of a parameter name, or -1 when absent.
    int index_of(const std::string& n) const {
        for (size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == n) return static_cast<int>(i);
        return -1;
    }

    bool same_as(const ParamSet& other) const { return names_ == other.names_; }

  private:
    explicit ParamSet(std::vector<std::string> names) : names_(std::move(names)) {}
    std::vector<std::string> names_;
};

using ParamSetPtr = std::shared_ptr<const ParamSet>;

inline void require_same_params(const ParamSetPtr& a, const ParamSetPtr& b) {
    if (a.get() == b.get()) return;
    if (!a || !b || !a->same_as(*b))
        throw ParamMismatch("operands declared over different parameter sets");
}

} // namespace qre
