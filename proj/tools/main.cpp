#include "zwdpp/cli.hpp"

int main(int argc, char** argv) { return zwdpp::cli::cli_main(argc, argv); }
