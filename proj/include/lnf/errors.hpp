#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lnf {

// Failure while decoding an interchange format. offset() is the byte index of
// the offending character (text length for truncated input).
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& msg, std::size_t offset)
      : std::runtime_error(msg + " (byte " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// Request outside an operation's feasibility envelope. Refused, not failed.
class refusal_error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Missing or unusable configuration, e.g. an incomplete gadget store.
class config_error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A constructed object failed its post-construction checks.
class verification_error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Plan/gadget mismatch while assembling a graph.
class assembly_error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace lnf
