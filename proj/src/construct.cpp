#include "mp/construct.hpp"
