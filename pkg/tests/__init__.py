"""
dsau 测试包
"""
