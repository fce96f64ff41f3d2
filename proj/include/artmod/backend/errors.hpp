#pragma once

#include <string>
#include <string_view>

#include "artmod/error.hpp"

namespace artmod::backend {

class BackendError : public Error {
public:
    enum class Kind { missing_file, shape_mismatch, unsupported_kind, invalid_spec, inference };

    BackendError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

/// One input (image or term) could not be decoded or encoded. Batch
/// operations catch this per item and keep going.
class DecodeError : public Error {
public:
    using Error::Error;
};

}  // namespace artmod::backend
