// SPDX-License-Identifier: Apache-2.0

#include "haarbeam/cli.hpp"

int main(int argc, char** argv) {
    return haarbeam::cli::run(argc, argv);
}
