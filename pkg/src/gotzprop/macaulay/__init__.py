"""Exact binomial arithmetic, monomial sets and persistence checks"""
