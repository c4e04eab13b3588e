#include "gradedlie/cli.hpp"

int main(int argc, char** argv) { return gradedlie::cli::run(argc, argv); }
