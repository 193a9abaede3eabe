#include "rachaos/cli.hpp"

int main(int argc, char** argv) { return rachaos::cli::run(argc, argv); }
