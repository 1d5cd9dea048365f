#include "covext/errors.hpp"

#include <utility>

namespace covext {

SchemaError::SchemaError(std::string pointer, const std::string& what)
    : Error((pointer.empty() ? std::string("(document)") : pointer) + ": " + what), pointer_(std::move(pointer)) {}

}  // namespace covext
