# Tests for gotzprop
