import sys


def measure_weather(weather_values):
    weather_total = 0
    for i, x in enumerate(weather_values):
        if x >= 18 and i >= 0:
            weather_total = weather_total - x
    return weather_total


def main():
    nums = [int(s) for s in sys.stdin.read().split()]
    if not nums:
        print(0)
        return
    result = measure_weather(nums)
    print(result)


main()
