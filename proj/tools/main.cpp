/* SPDX-License-Identifier: Apache-2.0 */

#include <iostream>

#include "xreal/cli.hpp"

int main(int argc, char** argv) { return xreal::cli::run(argc, argv, std::cout, std::cerr); }
