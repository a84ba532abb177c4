#pragma once

#include "crossprod/linalg.hpp"

#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace crossprod {

struct CheckItem {
    std::string name;
    bool pass = true;
    // Basis tuple of the first failing input, e.g. "(x,x,x)".
    std::optional<std::string> witness;

    bool operator==(const CheckItem&) const = default;
};

struct CheckReport {
    std::vector<CheckItem> items;

    bool passed() const;
    const CheckItem* find(const std::string& name) const;
    // First failing item in report order, if any.
    const CheckItem* first_failure() const;
    void append(const CheckReport& other);
};

// Compares lhs and rhs as operators. On failure the witness is the domain
// basis tuple (labels from lhs.domain()) of the first column that differs.
CheckItem check_identity(std::string name, const MultiLinMap& lhs, const MultiLinMap& rhs);

// Several operator identities reported as one item; the first failing pair wins.
CheckItem check_identities(std::string name,
                           std::initializer_list<std::pair<MultiLinMap, MultiLinMap>> pairs);

// "ITEM <name>: PASS" / "ITEM <name>: FAIL at <witness>".
std::string format_item(const CheckItem& item);

}  // namespace crossprod
