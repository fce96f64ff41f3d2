#include "artmod/dataset/manifest.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>

#include "artmod/dataset/csv.hpp"

namespace artmod::dataset {

namespace {

constexpr std::array<std::pair<Period, std::string_view>, 7> kPeriods{{
    {Period::pre1800, "pre1800"},
    {Period::p1800_1850, "1800-1850"},
    {Period::p1850_1900, "1850-1900"},
    {Period::p1900_1950, "1900-1950"},
    {Period::p1950_2000, "1950-2000"},
    {Period::p2000_2023, "2000-2023"},
    {Period::unknown, "unknown"},
}};

std::optional<std::string> optional_cell(std::string s) {
    if (s.empty()) return std::nullopt;
    return s;
}

}  // namespace

std::string_view to_string(Period p) noexcept {
    for (const auto& [value, token] : kPeriods)
        if (value == p) return token;
    return "unknown";
}

std::optional<Period> parse_period(std::string_view token) noexcept {
    if (token.empty()) return Period::unknown;
    for (const auto& [value, name] : kPeriods)
        if (name == token) return value;
    return std::nullopt;
}

std::string to_string(const Genders& g) {
    if (g.female && g.male) return "female+male";
    if (g.female) return "female";
    if (g.male) return "male";
    return "";
}

std::string_view to_string(ManifestRole r) noexcept {
    switch (r) {
        case ManifestRole::art_censored: return "art_censored";
        case ManifestRole::art_wikistyle: return "art_wikistyle";
        case ManifestRole::nsfw: return "nsfw";
    }
    return "nsfw";
}

std::optional<ManifestRole> parse_role(std::string_view s) noexcept {
    if (s == "art_censored") return ManifestRole::art_censored;
    if (s == "art_wikistyle") return ManifestRole::art_wikistyle;
    if (s == "nsfw") return ManifestRole::nsfw;
    return std::nullopt;
}

Manifest::Manifest(std::vector<ImageRecord> records, std::optional<ManifestRole> role)
    : records_(std::move(records)), role_(role) {
    index_.reserve(records_.size());
    for (std::size_t i = 0; i < records_.size(); ++i) {
        const auto& r = records_[i];
        if (!index_.emplace(r.id, i).second) throw Error("duplicate record id '" + r.id + "'");
        if (role_ && r.label != expected_label(*role_)) {
            throw Error("record '" + r.id + "' labeled " + std::string(to_string(r.label)) + " in a " +
                        std::string(to_string(*role_)) + " manifest");
        }
    }
}

const ImageRecord* Manifest::find(std::string_view id) const {
    auto it = index_.find(std::string(id));
    return it == index_.end() ? nullptr : &records_[it->second];
}

std::unordered_map<std::string, Label> Manifest::labels() const {
    std::unordered_map<std::string, Label> out;
    out.reserve(records_.size());
    for (const auto& r : records_) out.emplace(r.id, r.label);
    return out;
}

Manifest parse_manifest(std::istream& in, std::optional<ManifestRole> role, const std::string& source_name,
                        const std::filesystem::path& base_dir) {
    std::string line;
    std::size_t line_no = 0;
    if (!std::getline(in, line)) throw ManifestError(source_name, 1, "empty manifest (missing header)");
    ++line_no;
    if (line.size() >= 3 && static_cast<unsigned char>(line[0]) == 0xEF) line.erase(0, 3);  // UTF-8 BOM
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != kManifestHeader) {
        throw ManifestError(source_name, 1, "bad header, expected '" + std::string(kManifestHeader) + "'");
    }

    std::vector<ImageRecord> records;
    std::unordered_map<std::string, std::size_t> seen;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line == "\r") continue;
        std::vector<std::string> cells;
        try {
            cells = split_csv_line(line);
        } catch (const Error& e) {
            throw ManifestError(source_name, line_no, e.what());
        }
        if (cells.size() != 8) {
            throw ManifestError(source_name, line_no, "expected 8 columns, found " + std::to_string(cells.size()));
        }
        auto fail = [&](const std::string& what) { throw ManifestError(source_name, line_no, what); };

        ImageRecord r;
        r.id = cells[0];
        if (r.id.empty()) fail("empty id");
        if (auto [it, fresh] = seen.emplace(r.id, line_no); !fresh) {
            fail("duplicate id '" + r.id + "' (first seen on line " + std::to_string(it->second) + ")");
        }
        r.path = cells[1];
        if (!r.path.empty() && r.path.is_relative() && !base_dir.empty()) r.path = base_dir / r.path;

        auto label = parse_label(cells[2]);
        if (!label) fail("unknown label token '" + cells[2] + "'");
        r.label = *label;
        if (role && r.label != expected_label(*role)) {
            fail("record '" + r.id + "' labeled " + cells[2] + " but manifest role " +
                 std::string(to_string(*role)) + " requires " + std::string(to_string(expected_label(*role))));
        }

        if (!cells[3].empty() && cells[3] != "unknown") {
            std::string_view rest = cells[3];
            while (true) {
                const auto plus = rest.find('+');
                const auto tok = rest.substr(0, plus);
                if (tok == "female") {
                    r.genders.female = true;
                } else if (tok == "male") {
                    r.genders.male = true;
                } else {
                    fail("unknown gender token '" + std::string(tok) + "'");
                }
                if (plus == std::string_view::npos) break;
                rest.remove_prefix(plus + 1);
            }
        }

        auto period = parse_period(cells[4]);
        if (!period) fail("unknown period token '" + cells[4] + "'");
        r.period = *period;

        r.artist = optional_cell(cells[5]);
        r.platform = optional_cell(cells[6]);
        if (!cells[7].empty() && cells[7] != "unknown") {
            int year = 0;
            const auto* first = cells[7].data();
            const auto* last = first + cells[7].size();
            auto [ptr, ec] = std::from_chars(first, last, year);
            if (ec != std::errc{} || ptr != last) fail("invalid year '" + cells[7] + "'");
            r.year = year;
        }
        records.push_back(std::move(r));
    }
    return Manifest(std::move(records), role);
}

Manifest load_manifest(const std::filesystem::path& path, std::optional<ManifestRole> role) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open manifest '" + path.string() + "'");
    return parse_manifest(in, role, path.string(), path.parent_path());
}

void write_manifest(std::ostream& out, const Manifest& manifest) {
    out << kManifestHeader << '\n';
    for (const auto& r : manifest.records()) {
        out << csv_escape(r.id) << ',' << csv_escape(r.path.string()) << ',' << to_string(r.label) << ','
            << to_string(r.genders) << ',' << to_string(r.period) << ',' << csv_escape(r.artist.value_or(""))
            << ',' << csv_escape(r.platform.value_or("")) << ',';
        if (r.year) out << *r.year;
        out << '\n';
    }
}

}  // namespace artmod::dataset
