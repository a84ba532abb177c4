#include "crossprod/report.hpp"

#include <algorithm>

namespace crossprod {

bool CheckReport::passed() const {
    return std::all_of(items.begin(), items.end(), [](const CheckItem& i) { return i.pass; });
}

const CheckItem* CheckReport::find(const std::string& name) const {
    for (const auto& item : items)
        if (item.name == name) return &item;
    return nullptr;
}

const CheckItem* CheckReport::first_failure() const {
    for (const auto& item : items)
        if (!item.pass) return &item;
    return nullptr;
}

void CheckReport::append(const CheckReport& other) {
    items.insert(items.end(), other.items.begin(), other.items.end());
}

CheckItem check_identity(std::string name, const MultiLinMap& lhs, const MultiLinMap& rhs) {
    CheckItem item{std::move(name), true, std::nullopt};
    if (auto diff = first_difference(lhs, rhs)) {
        item.pass = false;
        item.witness = basis_tuple(lhs.domain(), diff->first);
    }
    return item;
}

CheckItem check_identities(std::string name,
                           std::initializer_list<std::pair<MultiLinMap, MultiLinMap>> pairs) {
    for (const auto& [lhs, rhs] : pairs) {
        CheckItem item = check_identity(name, lhs, rhs);
        if (!item.pass) return item;
    }
    return CheckItem{std::move(name), true, std::nullopt};
}

std::string format_item(const CheckItem& item) {
    if (item.pass) return "ITEM " + item.name + ": PASS";
    return "ITEM " + item.name + ": FAIL at " + item.witness.value_or("?");
}

}  // namespace crossprod
