#pragma once
#include "mp/code.hpp"
namespace mp {}
