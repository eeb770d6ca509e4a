#include "mcsl/cli.hpp"

int main(int argc, char** argv) { return mcsl::cli::run(argc, argv); }
