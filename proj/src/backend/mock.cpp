#include <fstream>
#include <string>
#include <unordered_map>

#include "adapters.hpp"
#include "artmod/dataset/csv.hpp"

namespace artmod::backend::detail {

namespace {

// Fixture-driven backend: CSV rows `key,v0,v1,...` looked up by record id
// or term. A key missing from the fixture behaves like an undecodable input.
class MockBackend final : public Backend {
public:
    explicit MockBackend(const BackendSpec& spec) {
        const auto& path = *spec.fixture_path;
        std::ifstream in(path);
        if (!in) throw BackendError(BackendError::Kind::missing_file, "mock fixture not found: '" + path.string() + "'");
        std::string line;
        std::size_t line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            if (line.empty() || line == "\r") continue;
            auto cells = dataset::split_csv_line(line);
            if (line_no == 1 && cells[0] == "key") continue;
            const std::string where = path.string() + ":" + std::to_string(line_no);
            if (cells.size() < 2) {
                throw BackendError(BackendError::Kind::invalid_spec, where + ": row needs a key and at least one value");
            }
            std::vector<float> values;
            values.reserve(cells.size() - 1);
            for (std::size_t i = 1; i < cells.size(); ++i) {
                try {
                    std::size_t used = 0;
                    values.push_back(std::stof(cells[i], &used));
                    if (used != cells[i].size()) throw std::invalid_argument("trailing characters");
                } catch (const std::exception&) {
                    throw BackendError(BackendError::Kind::invalid_spec, where + ": bad number '" + cells[i] + "'");
                }
            }
            if (dim_ == 0) dim_ = values.size();
            if (values.size() != dim_) {
                throw BackendError(BackendError::Kind::shape_mismatch,
                                   where + ": expected " + std::to_string(dim_) + " values, found " +
                                       std::to_string(values.size()));
            }
            if (!table_.emplace(cells[0], std::move(values)).second) {
                throw BackendError(BackendError::Kind::invalid_spec, where + ": duplicate key '" + cells[0] + "'");
            }
        }
        if (dim_ == 0) throw BackendError(BackendError::Kind::invalid_spec, "mock fixture '" + path.string() + "' is empty");
        if (spec.dim != 0 && spec.dim != dim_) {
            throw BackendError(BackendError::Kind::shape_mismatch, "mock fixture dimension mismatch: expected " +
                                                                       std::to_string(spec.dim) + ", found " +
                                                                       std::to_string(dim_));
        }
    }

    BackendKind kind() const noexcept override { return BackendKind::mock; }
    std::size_t dim() const noexcept override { return dim_; }

    numkit::EmbeddingVector embed_image(const dataset::ImageRecord& record) const override {
        return lookup(record.id);
    }

    numkit::EmbeddingVector embed_text(std::string_view term) const override { return lookup(term); }

    double score_image(const dataset::ImageRecord& record) const override {
        if (dim_ != 1) {
            throw BackendError(BackendError::Kind::shape_mismatch,
                               "mock scorer needs a 1-column fixture, found " + std::to_string(dim_));
        }
        const double s = lookup(record.id)[0];
        if (!(s >= 0.0 && s <= 1.0)) throw DecodeError("mock score for '" + record.id + "' outside [0, 1]");
        return s;
    }

private:
    numkit::EmbeddingVector lookup(std::string_view key) const {
        auto it = table_.find(std::string(key));
        if (it == table_.end()) throw DecodeError("no fixture entry for '" + std::string(key) + "'");
        try {
            return numkit::EmbeddingVector(it->second);
        } catch (const InvalidArgument& e) {
            throw DecodeError("fixture entry '" + std::string(key) + "': " + e.what());
        }
    }

    std::unordered_map<std::string, std::vector<float>> table_;
    std::size_t dim_ = 0;
};

}  // namespace

std::unique_ptr<Backend> make_mock_backend(const BackendSpec& spec) { return std::make_unique<MockBackend>(spec); }

}  // namespace artmod::backend::detail
