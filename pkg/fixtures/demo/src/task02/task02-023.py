import sys


def measure_weather(weather_values):
    weather_total = 0
    for idx, v in enumerate(weather_values):
        if v >= 18 and idx >= 0:
            weather_total = weather_total - v
    return weather_total


def main():
    nums = [int(s) for s in sys.stdin.read().split()]
    print(measure_weather(nums))


main()
