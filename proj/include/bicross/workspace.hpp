#pragma once

#include "bicross/json_io.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace bicross {

/// A named store of computed objects: a directory of JSON files plus a
/// manifest recording each object's kind and content hash. Objects
/// re-validate on load; manifest hashes must match file contents.
class Workspace {
public:
    explicit Workspace(std::filesystem::path dir);

    void put(const std::string& name, const std::string& kind, const Json& value);
    Json get(const std::string& name, const std::string& expected_kind) const;
    /// Load with hash check but without kind re-validation (for verifiers that
    /// must be able to inspect failing objects).
    Json get_raw(const std::string& name, const std::string& expected_kind) const;
    bool has(const std::string& name) const;
    std::string kind_of(const std::string& name) const;
    std::vector<std::string> names() const;

    const std::filesystem::path& dir() const { return dir_; }

private:
    std::filesystem::path dir_;
    std::filesystem::path manifest_path() const { return dir_ / "manifest.json"; }
    Json manifest() const;
    void write_manifest(const Json& m) const;
};

/// Kind-aware validation used on load; throws when the payload does not
/// re-validate as an object of its recorded kind.
void validate_payload(const std::string& kind, const Json& value);

} // namespace bicross
