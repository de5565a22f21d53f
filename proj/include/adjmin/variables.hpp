#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "adjmin/errors.hpp"

namespace adjmin {

// Ordered list of variable names with dense indices. The index order is the
// base indexing every monomial order permutes.
class VariableContext {
  public:
    VariableContext() = default;
    explicit VariableContext(std::vector<std::string> names) : names_(std::move(names)) {
        for (std::size_t i = 0; i < names_.size(); ++i) {
            if (!lookup_.emplace(names_[i], i).second)
                throw InputError("duplicate variable name: " + names_[i]);
        }
    }

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }

    std::optional<std::size_t> index_of(const std::string& name) const {
        auto it = lookup_.find(name);
        if (it == lookup_.end()) return std::nullopt;
        return it->second;
    }

    // New context with one auxiliary variable appended.
    VariableContext extended(const std::string& name) const {
        std::vector<std::string> ns = names_;
        ns.push_back(name);
        return VariableContext(std::move(ns));
    }

    VariableContext without_last() const {
        std::vector<std::string> ns = names_;
        if (ns.empty()) throw InputError("cannot drop variable from empty context");
        ns.pop_back();
        return VariableContext(std::move(ns));
    }

    friend bool operator==(const VariableContext& a, const VariableContext& b) {
        return a.names_ == b.names_;
    }

  private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, std::size_t> lookup_;
};

}  // namespace adjmin
