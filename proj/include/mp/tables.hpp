#pragma once
#include <string>
namespace mp {}
