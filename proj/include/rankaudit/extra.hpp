#ifndef RANKAUDIT_EXTRA_HPP
#define RANKAUDIT_EXTRA_HPP

#include <string>

#include <json.hpp>

#include "rankaudit/error.hpp"

namespace rankaudit {

/**
 * Extra — nested string-keyed metadata carried by rankings and comparators.
 *
 * Values are arbitrary JSON (scalar, sequence, or nested container). Writers
 * accumulate: a key can be added once, never silently replaced. Attempting to
 * overwrite raises ExtraKeyConflict, so audit diagnostics survive every
 * transformation intact.
 */
class Extra {
public:
    Extra() : data_(nlohmann::json::object()) {}

    bool contains(const std::string& key) const { return data_.contains(key); }

    void set(const std::string& key, nlohmann::json value) {
        if (data_.contains(key)) {
            fail(ErrorCode::ExtraKeyConflict,
                 "extra key already present: " + key);
        }
        data_[key] = std::move(value);
    }

    const nlohmann::json& at(const std::string& key) const {
        if (!data_.contains(key)) {
            fail(ErrorCode::ExtraKeyConflict, "extra key missing: " + key);
        }
        return data_.at(key);
    }

    /// Adds every top-level key of `other`; conflicts raise.
    void merge(const Extra& other) {
        for (auto it = other.data_.begin(); it != other.data_.end(); ++it) {
            set(it.key(), it.value());
        }
    }

    bool empty() const { return data_.empty(); }

    const nlohmann::json& data() const { return data_; }

    bool operator==(const Extra& other) const { return data_ == other.data_; }

private:
    nlohmann::json data_;
};

} // namespace rankaudit

#endif // RANKAUDIT_EXTRA_HPP
