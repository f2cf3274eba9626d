#pragma once

#include <stdexcept>
#include <string>

namespace block {

class BlockError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Operation needs a nonzero element.
class ZeroElementError : public BlockError {
  public:
    ZeroElementError() : BlockError("operation requires a nonzero element") {}
};

class WindowError : public BlockError {
  public:
    using BlockError::BlockError;
};

// Interior does not leave the required margin inside the solver window.
class WindowTooSmallError : public WindowError {
  public:
    using WindowError::WindowError;
};

class NotInWittError : public BlockError {
  public:
    NotInWittError() : BlockError("element is not supported on the second index 0 (Witt subalgebra)") {}
};

} // namespace block
