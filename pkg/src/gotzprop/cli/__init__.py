"""CLI scripts for gotzprop"""
