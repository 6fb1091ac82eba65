#pragma once

#include <stdexcept>
#include <string>

namespace arcdiag {

// Every module reports failures through this type; the message starts with
// the module name ("graph:", "canonical:", ...).
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace arcdiag
