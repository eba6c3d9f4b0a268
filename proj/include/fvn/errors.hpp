#pragma once

#include <stdexcept>

namespace fvn {

// Filesystem / stream failures; mapped to exit code 2 by the CLI. All other
// exceptions map to exit code 1.
struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace fvn
