// Apache License, Version 2.0, refer to LICENSE.txt

#ifndef TOPICGAP_ERRORS_H_
#define TOPICGAP_ERRORS_H_

#include <stdexcept>
#include <string>

namespace topicgap {

// Bad or inconsistent configuration: missing files, invalid parameters.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The input data cannot be used: malformed records, empty corpus, etc.
// Carries optional file/line context.
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
  DataError(const std::string& file, std::size_t line, const std::string& what)
      : std::runtime_error(file + ":" + std::to_string(line) + ": " + what),
        file_(file),
        line_(line) {}

  const std::string& file() const { return file_; }
  std::size_t line() const { return line_; }

 private:
  std::string file_;
  std::size_t line_ = 0;
};

}  // namespace topicgap

#endif  // TOPICGAP_ERRORS_H_
