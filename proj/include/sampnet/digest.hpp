#ifndef SAMPNET_DIGEST_HPP
#define SAMPNET_DIGEST_HPP

#include <string>

namespace sampnet {

// SHA-256 of a byte string, lowercase hex.
std::string sha256_hex(const std::string& bytes);

// SHA-256 of a file's contents. Throws ValidationError if unreadable.
std::string sha256_file(const std::string& path);

}  // namespace sampnet

#endif  // SAMPNET_DIGEST_HPP
