#pragma once
namespace mp {}
