#include "aode/cli.hpp"

int main(int argc, char** argv) { return aode::cli::run(argc, argv); }
