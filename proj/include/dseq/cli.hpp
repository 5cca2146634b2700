#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dseq::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitIo = 2;
inline constexpr int kExitVerifyFailed = 3;

/// Runs the dseqrng command line. `args` excludes the program name.
int run(std::vector<std::string> args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace dseq::cli
