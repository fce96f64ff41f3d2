#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "artmod/error.hpp"
#include "artmod/label.hpp"

namespace artmod::dataset {

enum class Period { pre1800, p1800_1850, p1850_1900, p1900_1950, p1950_2000, p2000_2023, unknown };

/// Manifest token ("1850-1900", "pre1800", ...).
std::string_view to_string(Period p) noexcept;
std::optional<Period> parse_period(std::string_view token) noexcept;

/// Images can show several bodies, so gender is a set, not a scalar.
struct Genders {
    bool female = false;
    bool male = false;

    bool empty() const noexcept { return !female && !male; }
    friend bool operator==(const Genders&, const Genders&) = default;
};

/// "female", "male", "female+male" or "" (unknown).
std::string to_string(const Genders& g);

struct ImageRecord {
    std::string id;
    std::filesystem::path path;
    Label label = Label::safe;
    Genders genders;
    Period period = Period::unknown;
    std::optional<std::string> artist;
    std::optional<std::string> platform;
    std::optional<int> year;
};

/// Dataset roles mirror the three corpora: censored contemporary art,
/// WikiArt-style art, and pornographic material.
enum class ManifestRole { art_censored, art_wikistyle, nsfw };

std::string_view to_string(ManifestRole r) noexcept;
std::optional<ManifestRole> parse_role(std::string_view s) noexcept;

/// Art roles are ground-truth safe; nsfw is ground-truth unsafe.
constexpr Label expected_label(ManifestRole r) noexcept {
    return r == ManifestRole::nsfw ? Label::unsafe : Label::safe;
}
constexpr bool is_art(ManifestRole r) noexcept { return r != ManifestRole::nsfw; }

/// Ordered, id-unique set of records. A manifest without a role may mix
/// labels (e.g. a combined evaluation set).
class Manifest {
public:
    Manifest() = default;
    /// Validates id uniqueness and, when a role is given, label consistency.
    Manifest(std::vector<ImageRecord> records, std::optional<ManifestRole> role);

    const std::vector<ImageRecord>& records() const noexcept { return records_; }
    std::optional<ManifestRole> role() const noexcept { return role_; }
    std::size_t size() const noexcept { return records_.size(); }
    bool empty() const noexcept { return records_.empty(); }

    const ImageRecord* find(std::string_view id) const;
    bool contains(std::string_view id) const { return find(id) != nullptr; }

    /// id -> ground-truth label.
    std::unordered_map<std::string, Label> labels() const;

private:
    std::vector<ImageRecord> records_;
    std::optional<ManifestRole> role_;
    std::unordered_map<std::string, std::size_t> index_;
};

/// Parse error carrying the 1-based line number of the offending row.
class ManifestError : public Error {
public:
    ManifestError(const std::string& source, std::size_t line, const std::string& what)
        : Error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

inline constexpr std::string_view kManifestHeader = "id,path,label,genders,period,artist,platform,year";

/// Parse CSV with header `id,path,label,genders,period,artist,platform,year`.
/// Relative image paths are resolved against `base_dir`.
Manifest parse_manifest(std::istream& in, std::optional<ManifestRole> role, const std::string& source_name,
                        const std::filesystem::path& base_dir = {});

Manifest load_manifest(const std::filesystem::path& path, std::optional<ManifestRole> role);

void write_manifest(std::ostream& out, const Manifest& manifest);

}  // namespace artmod::dataset
