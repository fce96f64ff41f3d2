#pragma once

#include <memory>

#include "artmod/backend/backend.hpp"

namespace artmod::backend::detail {

std::unique_ptr<Backend> make_mock_backend(const BackendSpec& spec);
std::unique_ptr<Backend> make_onnx_backend(const BackendSpec& spec);

}  // namespace artmod::backend::detail
