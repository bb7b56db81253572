#include <iostream>

#include "countkern/cli.hpp"

int main(int argc, char **argv)
{
	return countkern::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
