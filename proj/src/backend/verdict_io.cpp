#include "artmod/backend/verdict_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <unordered_set>

#include "artmod/dataset/csv.hpp"
#include "artmod/error.hpp"

namespace artmod::backend {

void write_verdicts(std::ostream& out, const VerdictList& verdicts) {
    out << "id,score,label,threshold\n";
    for (const auto& [id, v] : verdicts) {
        out << dataset::csv_escape(id) << ',' << dataset::csv_number(v.score) << ',' << to_string(v.label) << ',' << dataset::csv_number(v.threshold) << '\n';
    }
}

VerdictList read_verdicts(std::istream& in, const std::string& source) {
    std::string line;
    std::size_t line_no = 1;
    if (!std::getline(in, line)) throw Error(source + ": empty verdict file");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "id,score,label,threshold") throw Error(source + ":1: expected header id,score,label,threshold");

    VerdictList out;
    std::unordered_set<std::string> seen;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line == "\r") continue;
        const std::string where = source + ":" + std::to_string(line_no) + ": ";
        auto cells = dataset::split_csv_line(line);
        if (cells.size() != 4) throw Error(where + "expected 4 columns");
        if (!seen.insert(cells[0]).second) throw Error(where + "duplicate id '" + cells[0] + "'");
        const auto label = parse_label(cells[2]);
        if (!label) throw Error(where + "unknown label '" + cells[2] + "'");
        Verdict v;
        try {
            v = binarize(std::stod(cells[1]), std::stod(cells[3]));
        } catch (const std::logic_error&) {
            throw Error(where + "bad score/threshold");
        } catch (const Error& e) {
            throw Error(where + e.what());
        }
        if (v.label != *label) throw Error(where + "label disagrees with score and threshold");
        out.emplace_back(cells[0], v);
    }
    return out;
}

VerdictList load_verdicts(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open verdict file '" + path.string() + "'");
    return read_verdicts(in, path.string());
}

}  // namespace artmod::backend
